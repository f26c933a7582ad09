// Acceptance checks AC1..AC9. Prints one [PASS]/[FAIL] line per criterion
// and exits nonzero if any criterion fails or exceeds its time limit.

#include "snfpart/commands.hpp"
#include "snfpart/qcatalan.hpp"
#include "snfpart/recurrence.hpp"
#include "snfpart/selftest.hpp"
#include "snfpart/snf.hpp"
#include "snfpart/weights.hpp"

#include "../test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace snfpart;
using snfpart::testing::partitions_up_to;
using snfpart::testing::poly;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= limit_s) {
        o.ok = false;
        o.detail = "time limit exceeded";
    }
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, limit_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

const Partition kSmall{3, 2};
const Partition kLarge{5, 4, 1};

Outcome ac1()
{
    Outcome o;
    const std::string text = cmd_weights(kSmall, Naming::letters).text;
    const std::string expected = "lambda = (3,2), lambda* rows = 4 4 3\n"
                                 "(1,1) abcde+bcde+bce+cde+ce+de+c+e+1\n"
                                 "(1,2) bce+ce+c+e+1\n"
                                 "(1,3) c+1\n"
                                 "(1,4) 1  [border]\n"
                                 "(2,1) de+e+1\n"
                                 "(2,2) e+1\n"
                                 "(2,3) 1  [border]\n"
                                 "(2,4) 1  [border]\n"
                                 "(3,1) 1  [border]\n"
                                 "(3,2) 1  [border]\n"
                                 "(3,3) 1  [border]\n";
    o.expect(text == expected, "grid mismatch:\n" + text);
    return o;
}

Outcome ac2()
{
    Outcome o;
    const Polynomial det = determinant(square_matrix(kSmall, {1, 1}));
    o.expect(render(det, VariableNaming::letters(kSmall)) == "abcde^2", "det = " + render(det));
    return o;
}

Outcome ac3()
{
    Outcome o;
    const PolyMatrix W = square_matrix(kSmall, {1, 1});
    const std::vector<Polynomial> diag{poly("abcde", kSmall), poly("e", kSmall), 1};
    for (const SnfResult& r : {snf_recurrence(kSmall), snf_inductive(kSmall, 3, 3)}) {
        const std::string name = to_string(r.algorithm);
        o.expect(r.diagonal == diag, name + ": wrong diagonal");
        o.expect(r.P.is_upper_unitriangular() && r.Q.is_lower_unitriangular(), name + ": not unitriangular");
        o.expect(r.P * W * r.Q == normal_form_matrix(3, 3, diag), name + ": P*M*Q != diag");
        o.expect(verify_snf(W, r).ok, name + ": verify_snf failed");
    }
    return o;
}

Outcome ac4()
{
    Outcome o;
    for (const auto& [lambda, top] : {std::pair{kSmall, std::string("abcde")}, std::pair{kLarge, std::string("abcdefghij")}}) {
        const std::vector<Polynomial> expected{poly(top, lambda), 0, 0};
        for (int j = 1; j <= 3; ++j)
            o.expect(check_recurrence(lambda, j) == expected[static_cast<std::size_t>(j - 1)],
                     "residual mismatch for " + lambda.to_string() + " at j=" + std::to_string(j));
    }
    return o;
}

Outcome ac5()
{
    Outcome o;
    const Polynomial six = poly("1+x13+x12x13+x13x24+x12x13x24+x12x13x23x24");
    std::size_t with_four = 0;
    for (const Partition& lambda : partitions_up_to(12)) {
        const int rho = lambda.rank();
        if (lambda.part(2) == 4) {
            ++with_four;
            o.expect(omega(lambda, 2) == six, "Omega_2 mismatch for " + lambda.to_string());
        }
        for (int i = 1; i <= rho; ++i) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(lambda.part(i)), static_cast<unsigned long>(i));
            o.expect(Integer(static_cast<unsigned long>(omega(lambda, i).term_count())) == c,
                     "term count of Omega_" + std::to_string(i) + " for " + lambda.to_string());
        }
    }
    o.expect(with_four > 0, "no partition with lambda_2 = 4");
    return o;
}

Outcome ac6()
{
    Outcome o;
    const Polynomial p = weight_polynomial(kLarge, {1, 1});
    o.expect(p.term_count() == 34, "term count " + std::to_string(p.term_count()));
    o.expect(p.max_exponent() <= 1, "exponent above 1");
    for (const Term& t : p.terms())
        o.expect(t.coeff == 1, "coefficient other than 1");
    return o;
}

Outcome ac7()
{
    Outcome o;
    const SelftestReport rep = run_selftest(12);
    for (const auto& s : rep.suites)
        o.expect(s.failed == 0,
                 s.name + ": " + std::to_string(s.failed) + " failures" + (s.failures.empty() ? "" : ", " + s.failures[0]));
    o.expect(rep.partitions == 272, "partition count " + std::to_string(rep.partitions));
    o.detail = o.ok ? std::to_string(rep.partitions) + " partitions, " + std::to_string(rep.suites.size()) + " suites"
                    : o.detail;
    return o;
}

Outcome ac8()
{
    Outcome o;
    o.expect(q_catalan(3).to_string() == "1+2q+q^2+q^3", "C3 = " + q_catalan(3).to_string());
    for (int n = 1; n <= 8; ++n) {
        const SnfResult r = snf_recurrence(staircase(n));
        const auto exps = expected_snf_exponents(n);
        bool ok = r.diagonal.size() == exps.size();
        for (std::size_t k = 0; ok && k < exps.size(); ++k)
            ok = substitute_uniform(r.diagonal[k]) == UniPoly::monomial(exps[k]);
        o.expect(ok, "SNF exponents of M_" + std::to_string(n));
    }
    std::vector<Integer> cat{1};
    for (int n = 0; n < 10; ++n) {
        Integer next = 0;
        for (int k = 0; k <= n; ++k)
            next += cat[static_cast<std::size_t>(k)] * cat[static_cast<std::size_t>(n - k)];
        cat.push_back(next);
    }
    const auto table = q_catalan_table(10);
    for (int n = 0; n <= 10; ++n)
        o.expect(table[static_cast<std::size_t>(n)].evaluate(1) == cat[static_cast<std::size_t>(n)],
                 "Catalan mismatch at n=" + std::to_string(n));
    return o;
}

Outcome ac9()
{
    Outcome o;
    for (const Partition& lambda : partitions_up_to(14))
        o.expect(contained_partitions(lambda).size() == count_contained_by_paths(lambda),
                 "count mismatch for " + lambda.to_string());
    return o;
}

} // namespace

int main()
{
    criterion("AC1", "weight grid of (3,2)", 1, ac1);
    criterion("AC2", "determinant of M(1,1) for (3,2)", 1, ac2);
    criterion("AC3", "SNF of (3,2) by both algorithms", 1, ac3);
    criterion("AC4", "alternating relation residuals for (3,2) and (5,4,1)", 1, ac4);
    criterion("AC5", "Omega_2 six-term form and Omega term counts, |lambda| <= 12", 120, ac5);
    criterion("AC6", "P_11 of (5,4,1) has 34 unit terms", 1, ac6);
    criterion("AC7", "property suite, |lambda| <= 12", 600, ac7);
    criterion("AC8", "q-Catalan values and staircase SNF, n <= 8", 120, ac8);
    criterion("AC9", "contained partitions vs path count, |lambda| <= 14", 120, ac9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
