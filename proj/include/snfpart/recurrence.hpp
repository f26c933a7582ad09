#pragma once

#include "snfpart/partition.hpp"
#include "snfpart/polynomial.hpp"

#include <vector>

namespace snfpart {

/**
 * The factors of the alternating row relation among the weight polynomials:
 * for 2 <= j <= rho+1,  sum_i (-1)^i tau_i P_{i+1,j} = 0, and for j = 1 the
 * same sum equals A_11.
 *
 * R_i is the i x (lambda_i - i) array whose row a holds the cells
 * (a, a+1), ..., (a, lambda_i - i + a). X_i consists of the subarrays whose
 * row lengths c_1 >= ... >= c_i >= 0 are right-justified in R_i, and
 * Omega_i sums their monomials. S_i collects the cells of row a <= i to the
 * right of R_i, and tau_i = Omega_i * prod_{S_i} x.
 */
struct TauFamily {
    Partition partition;
    std::vector<Polynomial> taus;            // tau_0 .. tau_rho
    std::vector<Polynomial> omegas;          // Omega_0 .. Omega_rho
    std::vector<std::vector<Cell>> s_sets;   // S_0 .. S_rho
};

// Rows of R_i; an array with i rows and no columns when lambda_i == i.
// Requires 1 <= i <= rank.
std::vector<std::vector<Cell>> build_R(const Partition& lambda, int i);

// Requires 0 <= i <= rank; Omega_0 = 1.
Polynomial omega(const Partition& lambda, int i);

// Requires 0 <= i <= rank; row-major order.
std::vector<Cell> s_set(const Partition& lambda, int i);

Polynomial tau(const Partition& lambda, int i);

TauFamily tau_family(const Partition& lambda);

// sum_{i=0}^{rho} (-1)^i tau_i P_{i+1,j}, for 1 <= j <= rho+1.
Polynomial check_recurrence(const Partition& lambda, int j);

} // namespace snfpart
