#include "snfpart/errors.hpp"
#include "snfpart/snf.hpp"
#include "snfpart/weights.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace snfpart;
using snfpart::testing::poly;
using snfpart::testing::random_partition;

namespace {

const Partition kSmall{3, 2};

std::vector<Polynomial> expected_diagonal(const Partition& lambda)
{
    std::vector<Polynomial> d;
    for (int k = 1; k <= lambda.rank() + 1; ++k)
        d.push_back(leading_monomial_A(lambda, {k, k}));
    return d;
}

} // namespace

TEST_CASE("both algorithms on (3,2)")
{
    auto L = [](const std::string& s) { return poly(s, kSmall); };
    const std::vector<Polynomial> diag{L("abcde"), L("e"), 1};
    const PolyMatrix W = square_matrix(kSmall, {1, 1});
    for (const SnfResult& r : {snf_recurrence(kSmall), snf_inductive(kSmall, 3, 3)}) {
        CAPTURE(to_string(r.algorithm));
        CHECK(r.diagonal == diag);
        CHECK(r.P.is_upper_unitriangular());
        CHECK(r.Q.is_lower_unitriangular());
        CHECK(r.P * W * r.Q == r.D);
        CHECK(verify_snf(W, r).ok);
    }
}

TEST_CASE("small cases")
{
    SUBCASE("empty partition")
    {
        const SnfResult r = snf_recurrence(Partition{});
        CHECK(r.diagonal == std::vector<Polynomial>{1});
        CHECK(snf_inductive(Partition{}, 1, 1).diagonal == std::vector<Polynomial>{1});
    }
    SUBCASE("(2,2)")
    {
        const Partition p{2, 2};
        const std::vector<Polynomial> diag{poly("x11x12x21x22"), poly("x22"), 1};
        CHECK(snf_recurrence(p).diagonal == diag);
        CHECK(snf_inductive(p, 3, 3).diagonal == diag);
    }
    SUBCASE("(1)")
    {
        CHECK(snf_recurrence(Partition{1}).diagonal == std::vector<Polynomial>{poly("x11"), 1});
    }
}

TEST_CASE("rectangles")
{
    auto L = [](const std::string& s) { return poly(s, kSmall); };
    const SnfResult r = snf_inductive(kSmall, 2, 3);
    CHECK(r.diagonal == std::vector<Polynomial>{L("bce"), 1});
    CHECK(r.P.rows() == 2);
    CHECK(r.Q.rows() == 3);
    CHECK(verify_snf(rect_weight_matrix(kSmall, 2, 3), r).ok);

    const SnfResult row = snf_inductive(kSmall, 1, 4);
    CHECK(row.diagonal == std::vector<Polynomial>{1});
    CHECK(verify_snf(rect_weight_matrix(kSmall, 1, 4), row).ok);

    const SnfResult tall = snf_rectangle(kSmall, 3, 2);
    CHECK(tall.diagonal == std::vector<Polynomial>{L("de"), 1});
    CHECK(verify_snf(rect_weight_matrix(kSmall, 3, 2), tall).ok);
    CHECK(tall.D == normal_form_matrix(3, 2, tall.diagonal));

    CHECK_THROWS_AS(snf_inductive(kSmall, 3, 2), InvalidRectangle);
    CHECK_THROWS_AS(snf_inductive(kSmall, 2, 2), InvalidRectangle);
    CHECK_THROWS_AS(snf_rectangle(kSmall, 2, 2), CornerNotOnBorder);
}

TEST_CASE("normal form layout")
{
    const PolyMatrix wide = normal_form_matrix(2, 3, {poly("x11"), 1});
    CHECK(wide == PolyMatrix({{0, poly("x11"), 0}, {0, 0, 1}}));
    const PolyMatrix tall = normal_form_matrix(3, 2, {poly("x11"), 1});
    CHECK(tall == PolyMatrix({{0, 0}, {poly("x11"), 0}, {0, 1}}));
}

TEST_CASE("verify_snf rejects bad certificates")
{
    const PolyMatrix W = square_matrix(kSmall, {1, 1});
    SnfResult good = snf_recurrence(kSmall);

    SUBCASE("identity transforms")
    {
        SnfResult r = good;
        r.P = PolyMatrix::identity(3);
        r.Q = PolyMatrix::identity(3);
        const VerifyReport rep = verify_snf(W, r);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.reason.empty());
        CHECK_FALSE(rep.residual.is_zero());
    }
    SUBCASE("tampered diagonal")
    {
        SnfResult r = good;
        r.diagonal[1] = poly("e+1", kSmall);
        r.D = normal_form_matrix(3, 3, r.diagonal);
        CHECK_FALSE(verify_snf(W, r).ok);
    }
    SUBCASE("non-unitriangular P")
    {
        SnfResult r = good;
        r.P(0, 0) = 2;
        CHECK_FALSE(verify_snf(W, r).ok);
    }
    SUBCASE("shape mismatch")
    {
        SnfResult r = good;
        r.P = PolyMatrix::identity(2);
        CHECK_THROWS_AS(verify_snf(W, r), DimensionMismatch);
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant(square_matrix(kSmall, {1, 1})) == poly("abce^2d", kSmall));
    CHECK(determinant(PolyMatrix::identity(1)) == 1);
    CHECK(determinant(PolyMatrix({{poly("x11"), 2}, {3, poly("x12")}})) == poly("x11x12-6"));
    CHECK(substitute_uniform(determinant(square_matrix(Partition{2, 1}, {1, 1}))) == UniPoly::monomial(3));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, {1, 1})), NotSquare);
    CHECK_THROWS_AS(determinant(PolyMatrix::identity(9)), TooLarge);
}

TEST_CASE("random partitions up to size 20")
{
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 50; ++trial) {
        const Partition lambda = random_partition(rng, 20);
        CAPTURE(lambda);
        const SnfResult a = snf_recurrence(lambda);
        const int n = lambda.rank() + 1;
        const SnfResult b = snf_inductive(lambda, n, n);
        CHECK(a.diagonal == b.diagonal);
        CHECK(a.diagonal == expected_diagonal(lambda));
        const PolyMatrix W = square_matrix(lambda, {1, 1});
        CHECK(verify_snf(W, a).ok);
        CHECK(verify_snf(W, b).ok);
    }
}

TEST_CASE("every border rectangle, |lambda| <= 7")
{
    for (const Partition& lambda : snfpart::testing::partitions_up_to(7)) {
        CAPTURE(lambda);
        for (const Cell& c : ExtendedDiagram(lambda).border()) {
            CAPTURE(c);
            const SnfResult r = snf_rectangle(lambda, c.row, c.col);
            CHECK(verify_snf(rect_weight_matrix(lambda, c.row, c.col), r).ok);
            const int d = std::min(c.row, c.col);
            REQUIRE(r.diagonal.size() == static_cast<std::size_t>(d));
            for (int k = 1; k <= d; ++k) {
                const Cell at = c.row <= c.col ? Cell{k, k + c.col - c.row} : Cell{k + c.row - c.col, k};
                CHECK(r.diagonal[static_cast<std::size_t>(k - 1)] == leading_monomial_A(lambda, at));
            }
        }
    }
}
