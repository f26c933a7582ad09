#include "snfpart/commands.hpp"

#include "snfpart/qcatalan.hpp"
#include "snfpart/recurrence.hpp"
#include "snfpart/selftest.hpp"
#include "snfpart/snf.hpp"
#include "snfpart/weights.hpp"

#include <sstream>

namespace snfpart {

namespace {

VariableNaming make_naming(const Partition& lambda, Naming naming)
{
    return naming == Naming::letters ? VariableNaming::letters(lambda) : VariableNaming::coords();
}

const char* naming_name(Naming n)
{
    return n == Naming::letters ? "letters" : "coords";
}

const char* algorithm_name(AlgorithmChoice a)
{
    switch (a) {
    case AlgorithmChoice::recurrence: return "recurrence";
    case AlgorithmChoice::inductive: return "inductive";
    case AlgorithmChoice::both: break;
    }
    return "both";
}

json cell_json(Cell c)
{
    return {c.row, c.col};
}

std::string render_list(const std::vector<Polynomial>& ps, const VariableNaming& naming)
{
    std::string out = "(";
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (k)
            out += ", ";
        out += render(ps[k], naming);
    }
    return out + ")";
}

std::string render_cells(const std::vector<Cell>& cells)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < cells.size(); ++k)
        os << (k ? "," : "") << cells[k];
    os << '}';
    return os.str();
}

} // namespace

CommandOutput cmd_weights(const Partition& lambda, Naming naming)
{
    const VariableNaming names = make_naming(lambda, naming);
    const ExtendedDiagram ext(lambda);
    WeightGenerator gen;

    CommandOutput out;
    std::ostringstream text;
    text << "lambda = " << lambda << ", lambda* rows =";
    for (int len : ext.row_lengths())
        text << ' ' << len;
    text << '\n';

    json cells = json::array();
    for (const Cell& c : ext.cells()) {
        const Polynomial p = gen.weight(lambda, c);
        const bool border = ext.on_border(c);
        const std::string rendered = render(p, names);
        text << c << ' ' << rendered << (border ? "  [border]" : "") << '\n';
        cells.push_back({{"cell", cell_json(c)},
                         {"border", border},
                         {"polynomial", polynomial_to_json(p)},
                         {"text", rendered}});
    }
    out.text = text.str();
    out.envelope = {{"command", "weights"},
                    {"input", {{"partition", partition_to_json(lambda)}, {"naming", naming_name(naming)}}},
                    {"result", {{"extended_rows", ext.row_lengths()}, {"cells", std::move(cells)}}}};
    return out;
}

CommandOutput cmd_snf(const Partition& lambda, AlgorithmChoice algorithm,
                      std::optional<std::pair<int, int>> rect, Naming naming)
{
    if (rect && algorithm != AlgorithmChoice::inductive)
        throw UsageError("--rect requires --algorithm inductive");
    const VariableNaming names = make_naming(lambda, naming);
    const int side = lambda.rank() + 1;
    const int d = rect ? rect->first : side;
    const int e = rect ? rect->second : side;

    std::vector<SnfResult> results;
    if (algorithm != AlgorithmChoice::inductive)
        results.push_back(snf_recurrence(lambda));
    if (algorithm != AlgorithmChoice::recurrence)
        results.push_back(snf_rectangle(lambda, d, e));

    const PolyMatrix w = rect_weight_matrix(lambda, d, e);
    bool verified = true;
    json runs = json::array();
    std::ostringstream text;
    text << "lambda = " << lambda << ", W is " << d << 'x' << e << '\n';
    for (const SnfResult& r : results) {
        const bool ok = verify_snf(w, r).ok;
        verified = verified && ok;
        runs.push_back(snf_to_json(r, ok));
        text << to_string(r.algorithm) << ": diagonal " << render_list(r.diagonal, names)
             << (ok ? "  verified" : "  NOT VERIFIED") << '\n';
        text << "  P =\n" << r.P.to_string(names) << "  Q =\n" << r.Q.to_string(names);
    }

    json result = {{"runs", std::move(runs)}};
    bool agree = true;
    if (results.size() == 2) {
        agree = results[0].diagonal == results[1].diagonal;
        result["agree"] = agree;
        text << "agree: " << (agree ? "true" : "false") << '\n';
    }

    CommandOutput out;
    out.text = text.str();
    json input = {{"partition", partition_to_json(lambda)},
                  {"algorithm", algorithm_name(algorithm)},
                  {"naming", naming_name(naming)}};
    if (rect)
        input["rect"] = {d, e};
    out.envelope = {{"command", "snf"}, {"input", std::move(input)}, {"result", std::move(result)},
                    {"verified", verified && agree}};
    out.exit_code = (verified && agree) ? kExitOk : kExitVerification;
    return out;
}

CommandOutput cmd_recurrence(const Partition& lambda, std::optional<int> column, Naming naming)
{
    const VariableNaming names = make_naming(lambda, naming);
    const int rho = lambda.rank();
    if (column && (*column < 1 || *column > rho + 1))
        throw IndexOutOfRange("column " + std::to_string(*column) + " outside [1, " + std::to_string(rho + 1) + "]");
    const TauFamily fam = tau_family(lambda);

    std::ostringstream text;
    text << "lambda = " << lambda << ", rank = " << rho << '\n';
    json family = json::array();
    for (int i = 0; i <= rho; ++i) {
        const auto k = static_cast<std::size_t>(i);
        text << "tau_" << i << " = " << render(fam.taus[k], names) << "   (Omega_" << i << " = "
             << render(fam.omegas[k], names) << ", S_" << i << " = " << render_cells(fam.s_sets[k]) << ")\n";
        json s = json::array();
        for (const Cell& c : fam.s_sets[k])
            s.push_back(cell_json(c));
        family.push_back({{"i", i},
                          {"tau", polynomial_to_json(fam.taus[k])},
                          {"omega", polynomial_to_json(fam.omegas[k])},
                          {"s_set", std::move(s)}});
    }

    bool all_ok = true;
    json residuals = json::array();
    const int first = column ? *column : 1;
    const int last = column ? *column : rho + 1;
    for (int j = first; j <= last; ++j) {
        const Polynomial residual = check_recurrence(lambda, j);
        const Polynomial expected = j == 1 ? leading_monomial_A(lambda, {1, 1}) : Polynomial::zero();
        const bool ok = residual == expected;
        all_ok = all_ok && ok;
        text << "j=" << j << ": residual " << render(residual, names) << ", expected " << render(expected, names)
             << ", " << (ok ? "ok" : "MISMATCH") << '\n';
        residuals.push_back({{"j", j},
                             {"residual", polynomial_to_json(residual)},
                             {"expected", polynomial_to_json(expected)},
                             {"ok", ok}});
    }

    CommandOutput out;
    out.text = text.str();
    json input = {{"partition", partition_to_json(lambda)}, {"naming", naming_name(naming)}};
    input["j"] = column ? json(*column) : json("all");
    out.envelope = {{"command", "recurrence"},
                    {"input", std::move(input)},
                    {"result", {{"taus", std::move(family)}, {"residuals", std::move(residuals)}}},
                    {"verified", all_ok}};
    out.exit_code = all_ok ? kExitOk : kExitVerification;
    return out;
}

CommandOutput cmd_qcatalan(int n_max)
{
    if (n_max < 0)
        throw UsageError("n_max must be nonnegative");
    const auto table = q_catalan_table(n_max);
    std::ostringstream text;
    json rows = json::array();
    bool all_ok = true;
    for (int n = 0; n <= n_max; ++n) {
        const UniPoly& c = table[static_cast<std::size_t>(n)];
        json row = {{"n", n}, {"q_catalan", c.to_string()}};
        text << n << ", " << c.to_string();
        if (n >= 1) {
            const auto expected = expected_snf_exponents(n);
            const Partition stair = staircase(n);
            const int side = stair.rank() + 1;
            const SnfResult r = snf_inductive(stair, side, side);
            bool ok = r.diagonal.size() == expected.size();
            for (std::size_t k = 0; ok && k < expected.size(); ++k)
                ok = substitute_uniform(r.diagonal[k]) == UniPoly::monomial(expected[k]);
            // The specialized weight matrix must be M_n itself.
            const PolyMatrix sq = square_matrix(stair, {1, 1});
            const PolyMatrix mn = staircase_matrix(n);
            for (std::size_t u = 0; ok && u < sq.rows(); ++u)
                for (std::size_t v = 0; ok && v < sq.cols(); ++v)
                    ok = substitute_uniform(sq(u, v)) == substitute_uniform(mn(u, v));
            all_ok = all_ok && ok;
            text << ", (";
            for (std::size_t k = 0; k < expected.size(); ++k)
                text << (k ? "," : "") << expected[k];
            text << "), " << (ok ? "ok" : "FAIL");
            row["snf_exponents"] = expected;
            row["ok"] = ok;
        }
        text << '\n';
        rows.push_back(std::move(row));
    }
    CommandOutput out;
    out.text = text.str();
    out.envelope = {{"command", "qcatalan"},
                    {"input", {{"n_max", n_max}}},
                    {"result", {{"rows", std::move(rows)}}},
                    {"verified", all_ok}};
    out.exit_code = all_ok ? kExitOk : kExitVerification;
    return out;
}

CommandOutput cmd_selftest(int max_size)
{
    if (max_size < 1)
        throw UsageError("max_size must be at least 1");
    const SelftestReport report = run_selftest(max_size);
    std::ostringstream text;
    text << "partitions checked: " << report.partitions << " (sizes 0.." << max_size << ")\n";
    json suites = json::array();
    for (const auto& s : report.suites) {
        text << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
        for (const auto& f : s.failures)
            text << "  failure: " << f << '\n';
        suites.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
    }
    text << (report.ok() ? "all checks passed" : "FAILURES") << '\n';
    CommandOutput out;
    out.text = text.str();
    out.envelope = {{"command", "selftest"},
                    {"input", {{"max_size", max_size}}},
                    {"result", {{"partitions", report.partitions}, {"suites", std::move(suites)}}},
                    {"verified", report.ok()}};
    out.exit_code = report.ok() ? kExitOk : kExitVerification;
    return out;
}

} // namespace snfpart
