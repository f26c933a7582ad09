#include "snfpart/selftest.hpp"

#include "snfpart/recurrence.hpp"
#include "snfpart/snf.hpp"
#include "snfpart/weights.hpp"

#include <functional>
#include <sstream>

namespace snfpart {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

const char* const kSuiteNames[] = {
    "recurrence-residuals",
    "omega-term-counts",
    "snf-agreement",
    "diagonal-is-A",
    "determinant",
    "border-rectangles",
};

SuiteTally& suite(SelftestReport& report, std::size_t index)
{
    if (report.suites.empty())
        for (const char* name : kSuiteNames)
            report.suites.push_back({name, 0, 0, {}});
    return report.suites[index];
}

void record(SuiteTally& tally, bool ok, const std::function<std::string()>& describe)
{
    if (ok) {
        ++tally.passed;
        return;
    }
    ++tally.failed;
    if (tally.failures.size() < kMaxRecordedFailures)
        tally.failures.push_back(describe());
}

Integer binomial(long n, long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void check_guarded(SuiteTally& tally, const std::string& context, const std::function<bool()>& body)
{
    try {
        const bool ok = body();
        record(tally, ok, [&] { return context; });
    } catch (const std::exception& e) {
        record(tally, false, [&] { return context + ": " + e.what(); });
    }
}

} // namespace

bool SelftestReport::ok() const noexcept
{
    for (const auto& s : suites)
        if (s.failed)
            return false;
    return true;
}

void selftest_partition(const Partition& lambda, SelftestReport& report)
{
    ++report.partitions;
    const int rho = lambda.rank();
    const std::string tag = "lambda=" + lambda.to_string();

    for (int j = 1; j <= rho + 1; ++j) {
        check_guarded(suite(report, 0), tag + " j=" + std::to_string(j), [&] {
            const Polynomial expected = j == 1 ? leading_monomial_A(lambda, {1, 1}) : Polynomial::zero();
            return check_recurrence(lambda, j) == expected;
        });
    }

    for (int i = 1; i <= rho; ++i) {
        check_guarded(suite(report, 1), tag + " i=" + std::to_string(i), [&] {
            return Integer(static_cast<unsigned long>(omega(lambda, i).term_count())) ==
                   binomial(lambda.part(i), i);
        });
    }

    std::vector<Polynomial> rec_diag;
    check_guarded(suite(report, 2), tag, [&] {
        const SnfResult a = snf_recurrence(lambda);
        const SnfResult b = snf_inductive(lambda, rho + 1, rho + 1);
        rec_diag = a.diagonal;
        return a.diagonal == b.diagonal;
    });

    check_guarded(suite(report, 3), tag, [&] {
        if (rec_diag.size() != static_cast<std::size_t>(rho + 1))
            return false;
        for (int k = 1; k <= rho + 1; ++k)
            if (!(rec_diag[static_cast<std::size_t>(k - 1)] == leading_monomial_A(lambda, {k, k})))
                return false;
        return true;
    });

    if (rho + 1 <= 6) {
        check_guarded(suite(report, 4), tag, [&] {
            Polynomial prod = Polynomial::one();
            for (int k = 1; k <= rho + 1; ++k)
                prod *= leading_monomial_A(lambda, {k, k});
            return determinant(square_matrix(lambda, {1, 1})) == prod;
        });
    }

    const ExtendedDiagram ext(lambda);
    for (const Cell& corner : ext.border()) {
        if (corner.row > corner.col)
            continue;
        std::ostringstream ctx;
        ctx << tag << " rect " << corner.row << 'x' << corner.col;
        check_guarded(suite(report, 5), ctx.str(), [&] {
            const SnfResult r = snf_inductive(lambda, corner.row, corner.col);
            const int shift = corner.col - corner.row;
            for (int k = 1; k <= corner.row; ++k)
                if (!(r.diagonal[static_cast<std::size_t>(k - 1)] == leading_monomial_A(lambda, {k, k + shift})))
                    return false;
            return verify_snf(rect_weight_matrix(lambda, corner.row, corner.col), r).ok;
        });
    }
}

SelftestReport run_selftest(int max_size)
{
    SelftestReport report;
    report.max_size = max_size;
    suite(report, 0);
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& p : partitions_of(n))
            selftest_partition(p, report);
    return report;
}

} // namespace snfpart
