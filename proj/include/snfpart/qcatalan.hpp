#pragma once

#include "snfpart/partition.hpp"
#include "snfpart/poly_matrix.hpp"
#include "snfpart/polynomial.hpp"

#include <vector>

namespace snfpart {

// The staircase (n-1, n-2, ..., 1); empty for n <= 1.
Partition staircase(int n);

// C~_n(q): P_11 of staircase(n) with every variable set to q; C~_0 = 1.
UniPoly q_catalan(int n);

// C~_0 .. C~_{n_max}.
std::vector<UniPoly> q_catalan_table(int n_max);

/**
 * M_n with entry (i,j) = C~_{n+2-i-j}(q), of side floor(n/2)+1; q is carried
 * by the variable at cell (1,1).
 */
PolyMatrix staircase_matrix(int n);

// Exponents of the SNF diagonal of M_n: C(n+2-2k, 2) for k = 1 .. floor(n/2)+1.
std::vector<unsigned long> expected_snf_exponents(int n);

} // namespace snfpart
