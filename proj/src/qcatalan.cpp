#include "snfpart/qcatalan.hpp"

#include "snfpart/errors.hpp"
#include "snfpart/weights.hpp"

#include <string>

namespace snfpart {

Partition staircase(int n)
{
    std::vector<int> parts;
    for (int p = n - 1; p >= 1; --p)
        parts.push_back(p);
    return Partition(std::move(parts));
}

UniPoly q_catalan(int n)
{
    if (n < 0)
        throw IndexOutOfRange("q-Catalan index must be nonnegative, got " + std::to_string(n));
    if (n == 0)
        return UniPoly({Integer(1)});
    return substitute_uniform(weight_polynomial(staircase(n), {1, 1}));
}

std::vector<UniPoly> q_catalan_table(int n_max)
{
    std::vector<UniPoly> out;
    WeightGenerator gen;
    for (int n = 0; n <= n_max; ++n) {
        if (n == 0)
            out.emplace_back(std::vector<Integer>{1});
        else
            out.push_back(substitute_uniform(gen.weight(staircase(n), {1, 1})));
    }
    return out;
}

PolyMatrix staircase_matrix(int n)
{
    if (n < 1)
        throw IndexOutOfRange("staircase matrix index must be positive, got " + std::to_string(n));
    const int side = n / 2 + 1;
    const auto table = q_catalan_table(n);
    PolyMatrix m(static_cast<std::size_t>(side), static_cast<std::size_t>(side));
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                embed_univariate(table[static_cast<std::size_t>(n + 2 - i - j)]);
    return m;
}

std::vector<unsigned long> expected_snf_exponents(int n)
{
    if (n < 1)
        throw IndexOutOfRange("staircase matrix index must be positive, got " + std::to_string(n));
    std::vector<unsigned long> out;
    for (int k = 1; k <= n / 2 + 1; ++k) {
        const long m = n + 2 - 2 * k;
        out.push_back(m >= 2 ? static_cast<unsigned long>(m * (m - 1) / 2) : 0UL);
    }
    return out;
}

} // namespace snfpart
