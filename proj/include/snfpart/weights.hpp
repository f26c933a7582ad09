#pragma once

#include "snfpart/partition.hpp"
#include "snfpart/poly_matrix.hpp"
#include "snfpart/polynomial.hpp"

#include <map>
#include <vector>

namespace snfpart {

/**
 * Weight polynomials P_rs and their leading monomials A_rs.
 *
 * P_rs sums, over every partition mu inside lambda(r,s), the product of the
 * variables on the skew cells lambda(r,s) \ mu. Variables always carry the
 * absolute coordinates of lambda. The polynomial depends on the cell only
 * through the shape lambda(r,s) and a translation, so results are memoized
 * per shape in local coordinates.
 *
 * Not thread-safe: use one generator per thread.
 */
class WeightGenerator {
public:
    WeightGenerator() = default;

    // P_rs; throws CellOutOfRange unless c is in lambda*.
    Polynomial weight(const Partition& lambda, Cell c);
    // P_rs for any cell; cells with an empty region give 1.
    Polynomial weight_unchecked(const Partition& lambda, Cell c);

    // (rho_c + 1)-square of weights with top-left corner c.
    PolyMatrix square_matrix(const Partition& lambda, Cell c);
    // d x e weights from (1,1); the corner (d,e) must lie on the border strip.
    PolyMatrix rect_matrix(const Partition& lambda, int d, int e);

    std::size_t cached_shapes() const noexcept { return memo_.size(); }

private:
    const Polynomial& local_weight(const Partition& shape);
    std::map<std::vector<int>, Polynomial> memo_;
};

Polynomial weight_polynomial(const Partition& lambda, Cell c);

// Direct enumeration without memoization; a reference for the memoized path.
Polynomial weight_polynomial_direct(const Partition& lambda, Cell c);

// A_rs: product of the variables of lambda(r,s); 1 on the border. Throws CellOutOfRange.
Polynomial leading_monomial_A(const Partition& lambda, Cell c);

PolyMatrix square_matrix(const Partition& lambda, Cell c);
PolyMatrix rect_weight_matrix(const Partition& lambda, int d, int e);

} // namespace snfpart
