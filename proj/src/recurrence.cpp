#include "snfpart/recurrence.hpp"

#include "snfpart/errors.hpp"
#include "snfpart/weights.hpp"

#include <string>

namespace snfpart {

namespace {

void require_index(const Partition& lambda, int i, int lo)
{
    if (i < lo || i > lambda.rank())
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(lambda.rank()) + "] for " + lambda.to_string());
}

// Right-justified row lengths c_1 >= c_2 >= ... >= c_i, each at most `width`.
void enumerate_x(const std::vector<std::vector<Cell>>& r, std::size_t row, std::size_t bound,
                 std::vector<Cell>& chosen, std::vector<Term>& out)
{
    if (row == r.size()) {
        out.push_back({Monomial::product_of(chosen), 1});
        return;
    }
    const auto& cells = r[row];
    for (std::size_t c = 0; c <= bound; ++c) {
        for (std::size_t k = 0; k < c; ++k)
            chosen.push_back(cells[cells.size() - 1 - k]);
        enumerate_x(r, row + 1, c, chosen, out);
        chosen.resize(chosen.size() - c);
    }
}

} // namespace

std::vector<std::vector<Cell>> build_R(const Partition& lambda, int i)
{
    require_index(lambda, i, 1);
    const int width = lambda.part(i) - i;
    std::vector<std::vector<Cell>> rows(static_cast<std::size_t>(i));
    for (int a = 1; a <= i; ++a)
        for (int k = 1; k <= width; ++k)
            rows[static_cast<std::size_t>(a - 1)].push_back({a, a + k});
    return rows;
}

Polynomial omega(const Partition& lambda, int i)
{
    require_index(lambda, i, 0);
    if (i == 0)
        return Polynomial::one();
    const auto r = build_R(lambda, i);
    const std::size_t width = r.front().size();
    std::vector<Term> terms;
    std::vector<Cell> chosen;
    enumerate_x(r, 0, width, chosen, terms);
    return Polynomial::from_terms(std::move(terms));
}

std::vector<Cell> s_set(const Partition& lambda, int i)
{
    require_index(lambda, i, 0);
    std::vector<Cell> out;
    if (i == 0)
        return out;
    const int li = lambda.part(i);
    for (int a = 1; a <= i; ++a)
        for (int b = li - i + a + 1; b <= lambda.part(a); ++b)
            out.push_back({a, b});
    return out;
}

Polynomial tau(const Partition& lambda, int i)
{
    return omega(lambda, i) * Polynomial(Monomial::product_of(s_set(lambda, i)));
}

TauFamily tau_family(const Partition& lambda)
{
    TauFamily fam;
    fam.partition = lambda;
    const int rho = lambda.rank();
    for (int i = 0; i <= rho; ++i) {
        fam.omegas.push_back(omega(lambda, i));
        fam.s_sets.push_back(s_set(lambda, i));
        fam.taus.push_back(fam.omegas.back() * Polynomial(Monomial::product_of(fam.s_sets.back())));
    }
    return fam;
}

Polynomial check_recurrence(const Partition& lambda, int j)
{
    const int rho = lambda.rank();
    if (j < 1 || j > rho + 1)
        throw IndexOutOfRange("column " + std::to_string(j) + " outside [1, " + std::to_string(rho + 1) + "]");
    const TauFamily fam = tau_family(lambda);
    WeightGenerator gen;
    Polynomial sum;
    for (int i = 0; i <= rho; ++i) {
        Polynomial term = fam.taus[static_cast<std::size_t>(i)] * gen.weight(lambda, {i + 1, j});
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

} // namespace snfpart
