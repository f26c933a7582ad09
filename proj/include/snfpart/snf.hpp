#pragma once

#include "snfpart/errors.hpp"
#include "snfpart/partition.hpp"
#include "snfpart/poly_matrix.hpp"
#include "snfpart/polynomial.hpp"

#include <string>
#include <vector>

namespace snfpart {

enum class SnfAlgorithm { recurrence, inductive };

const char* to_string(SnfAlgorithm a) noexcept;

/**
 * Certified Smith form P * W * Q = D with P upper unitriangular and Q lower
 * unitriangular. For a d x e matrix with d <= e, D = (0 | diag(diagonal));
 * for d > e the zero block sits on top, D = (0 ; diag(diagonal)).
 */
struct SnfResult {
    PolyMatrix P;
    PolyMatrix Q;
    PolyMatrix D;
    std::vector<Polynomial> diagonal;
    SnfAlgorithm algorithm = SnfAlgorithm::recurrence;
};

class VerificationFailed : public Error {
public:
    VerificationFailed(const std::string& what, PolyMatrix residual)
        : Error(what), residual_(std::move(residual)) {}
    const PolyMatrix& residual() const noexcept { return residual_; }

private:
    PolyMatrix residual_;
};

struct VerifyReport {
    bool ok = false;
    std::string reason;  // empty when ok
    PolyMatrix residual; // P*W*Q minus the expected normal form
};

// The rows x cols matrix carrying `diagonal` in the layout described on SnfResult.
PolyMatrix normal_form_matrix(std::size_t rows, std::size_t cols, const std::vector<Polynomial>& diagonal);

/**
 * SNF of M(1,1) by row reduction with the tau-family: row 1 is cleared to
 * [A_11, 0, ..., 0] with the alternating row relation, column 1 by the same
 * relation for the conjugate partition, then the trailing block M(2,2) is
 * handled recursively. Diagonal (A_11, A_22, ..., A_{rho+1,rho+1}).
 */
SnfResult snf_recurrence(const Partition& lambda);

/**
 * SNF of the d x e weight matrix W_F (corner (d,e) on the border strip,
 * d <= e) by induction on |lambda|: a removable corner is peeled off and the
 * transforms for the smaller partition are lifted; a rectangular lambda with
 * F = lambda* reduces to F = lambda. Diagonal entry k is A_{k, k+e-d}.
 * Throws InvalidRectangle when d > e or the corner is not on the border.
 */
SnfResult snf_inductive(const Partition& lambda, int d, int e);

// snf_inductive for either orientation; d > e runs on the conjugate and transposes back.
SnfResult snf_rectangle(const Partition& lambda, int d, int e);

// Throws DimensionMismatch when the transforms do not fit W.
VerifyReport verify_snf(const PolyMatrix& W, const SnfResult& r);

// Exact determinant by cofactor expansion with memoized minors. Throws NotSquare, TooLarge (side > 8).
Polynomial determinant(const PolyMatrix& W);

} // namespace snfpart
