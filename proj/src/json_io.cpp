#include "snfpart/json_io.hpp"

#include "snfpart/errors.hpp"

namespace snfpart {

json polynomial_to_json(const Polynomial& p)
{
    json out = json::array();
    for (const Term& t : p.terms()) {
        json mono = json::array();
        for (const Factor& f : t.monomial.factors())
            mono.push_back({f.cell.row, f.cell.col, f.exponent});
        out.push_back({{"coeff", t.coeff.get_str()}, {"monomial", std::move(mono)}});
    }
    return out;
}

Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    try {
        for (const json& t : j) {
            Integer coeff;
            if (coeff.set_str(t.at("coeff").get<std::string>(), 10) != 0)
                throw ParseError("bad coefficient " + t.at("coeff").dump());
            std::vector<Factor> fs;
            for (const json& f : t.at("monomial")) {
                if (!f.is_array() || f.size() != 3)
                    throw ParseError("monomial factor must be [row, col, exp]");
                const int row = f[0].get<int>();
                const int col = f[1].get<int>();
                const long exp = f[2].get<long>();
                if (row < 1 || col < 1 || exp < 1)
                    throw ParseError("monomial factor " + f.dump() + " out of range");
                fs.push_back({{row, col}, static_cast<std::uint32_t>(exp)});
            }
            terms.push_back({Monomial(std::move(fs)), std::move(coeff)});
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
    return Polynomial::from_terms(std::move(terms));
}

json matrix_to_json(const PolyMatrix& m)
{
    json entries = json::array();
    for (std::size_t u = 0; u < m.rows(); ++u) {
        json row = json::array();
        for (std::size_t v = 0; v < m.cols(); ++v)
            row.push_back(polynomial_to_json(m(u, v)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()},
            {"cols", m.cols()},
            {"origin", {m.origin().row, m.origin().col}},
            {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j)
{
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const json& origin = j.at("origin");
        PolyMatrix m(rows, cols, {origin.at(0).get<int>(), origin.at(1).get<int>()});
        const json& entries = j.at("entries");
        if (entries.size() != rows)
            throw ParseError("matrix JSON has " + std::to_string(entries.size()) + " rows, header says " +
                             std::to_string(rows));
        for (std::size_t u = 0; u < rows; ++u) {
            if (entries[u].size() != cols)
                throw ParseError("matrix JSON row " + std::to_string(u + 1) + " has the wrong length");
            for (std::size_t v = 0; v < cols; ++v)
                m(u, v) = polynomial_from_json(entries[u][v]);
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
}

json snf_to_json(const SnfResult& r, bool verified)
{
    json diag = json::array();
    for (const auto& p : r.diagonal)
        diag.push_back(polynomial_to_json(p));
    return {{"diagonal", std::move(diag)},
            {"P", matrix_to_json(r.P)},
            {"Q", matrix_to_json(r.Q)},
            {"verified", verified},
            {"algorithm", to_string(r.algorithm)}};
}

json partition_to_json(const Partition& p)
{
    return p.parts();
}

} // namespace snfpart
