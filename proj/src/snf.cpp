#include "snfpart/snf.hpp"

#include "snfpart/recurrence.hpp"
#include "snfpart/weights.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>

namespace snfpart {

const char* to_string(SnfAlgorithm a) noexcept
{
    return a == SnfAlgorithm::recurrence ? "recurrence" : "inductive";
}

PolyMatrix normal_form_matrix(std::size_t rows, std::size_t cols, const std::vector<Polynomial>& diagonal)
{
    PolyMatrix d(rows, cols);
    const std::size_t n = std::min(rows, cols);
    if (diagonal.size() != n)
        throw DimensionMismatch("diagonal has " + std::to_string(diagonal.size()) + " entries, expected " +
                                std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
        if (rows <= cols)
            d(k, k + cols - rows) = diagonal[k];
        else
            d(k + rows - cols, k) = diagonal[k];
    }
    return d;
}

namespace {

struct Transforms {
    PolyMatrix P;
    PolyMatrix Q;
    std::vector<Polynomial> diagonal;
};

Polynomial alternating(const Polynomial& p, int i)
{
    return i % 2 == 0 ? p : -p;
}

// Works on lambda(offset+1, offset+1), given here re-anchored as `local`.
Transforms reduce_by_recurrence(const Partition& local, int offset)
{
    const int rho = local.rank();
    const auto n = static_cast<std::size_t>(rho + 1);
    if (rho == 0)
        return {PolyMatrix::identity(1), PolyMatrix::identity(1), {Polynomial::one()}};

    const TauFamily rows = tau_family(local);
    const TauFamily cols = tau_family(local.conjugate());

    PolyMatrix row_ops = PolyMatrix::identity(n);
    PolyMatrix col_ops = PolyMatrix::identity(n);
    for (int i = 1; i <= rho; ++i) {
        const auto k = static_cast<std::size_t>(i);
        row_ops(0, k) = alternating(rows.taus[k], i).shifted(offset, offset);
        col_ops(k, 0) = alternating(cols.taus[k].transposed(), i).shifted(offset, offset);
    }

    Transforms inner = reduce_by_recurrence(local.region_from({2, 2}), offset + 1);

    Transforms out;
    out.P = PolyMatrix::embed_in_identity(inner.P, n, 1) * row_ops;
    out.Q = col_ops * PolyMatrix::embed_in_identity(inner.Q, n, 1);
    out.diagonal.push_back(leading_monomial_A(local, {1, 1}).shifted(offset, offset));
    for (auto& p : inner.diagonal)
        out.diagonal.push_back(std::move(p));
    return out;
}

// Largest-row removable corner s whose removal keeps (d,e) inside the extended diagram.
std::optional<Cell> peelable_corner(const Partition& lambda, int d, int e)
{
    std::optional<Cell> best;
    for (const Cell& s : lambda.removable_corners())
        if (!(s.row + 1 == d && s.col + 1 == e))
            best = s;
    return best;
}

Transforms reduce_inductively(const Partition& lambda, int d, int e, WeightGenerator& gen)
{
    const auto rows = static_cast<std::size_t>(d);
    const auto cols = static_cast<std::size_t>(e);

    if (d == 1) {
        // W = [P_11 ... P_1e] with P_1e = 1: clear the row against the last column.
        PolyMatrix q = PolyMatrix::identity(cols);
        for (std::size_t j = 0; j + 1 < cols; ++j)
            q(cols - 1, j) = -gen.weight_unchecked(lambda, {1, static_cast<int>(j) + 1});
        return {PolyMatrix::identity(1), std::move(q), {Polynomial::one()}};
    }

    if (const auto corner = peelable_corner(lambda, d, e)) {
        const int a = corner->row;
        const int b = corner->col;
        const Partition smaller = lambda.without(*corner);
        const Polynomial z = Polynomial::variable(*corner);
        Transforms t = reduce_inductively(smaller, d, e, gen);

        if (a < d) {
            // b >= e: rows 1..a pick up z. Subtract P_{i,b+1} * row (a+1) from row i <= a.
            PolyMatrix ops = PolyMatrix::identity(rows);
            for (int i = 1; i <= a; ++i)
                ops(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(a)) =
                    -gen.weight_unchecked(smaller, {i, b + 1});
            const auto split = static_cast<std::size_t>(a);
            for (std::size_t i = 0; i < split; ++i)
                for (std::size_t j = split; j < rows; ++j)
                    if (!t.P(i, j).is_zero())
                        t.P(i, j) = z * t.P(i, j);
            t.P = t.P * ops;
            for (std::size_t k = 0; k < split; ++k)
                t.diagonal[k] = z * t.diagonal[k];
        } else {
            // b < e: columns 1..b pick up z. Subtract P_{a+1,j} * column (b+1) from column j <= b.
            PolyMatrix ops = PolyMatrix::identity(cols);
            for (int j = 1; j <= b; ++j)
                ops(static_cast<std::size_t>(b), static_cast<std::size_t>(j - 1)) =
                    -gen.weight_unchecked(smaller, {a + 1, j});
            const auto split = static_cast<std::size_t>(b);
            for (std::size_t i = split; i < cols; ++i)
                for (std::size_t j = 0; j < split; ++j)
                    if (!t.Q(i, j).is_zero())
                        t.Q(i, j) = z * t.Q(i, j);
            t.Q = ops * t.Q;
            for (std::size_t k = 0; k < t.diagonal.size(); ++k)
                if (k + cols - rows < split)
                    t.diagonal[k] = z * t.diagonal[k];
        }
        return t;
    }

    // Only (d-1, e-1) is removable, so lambda is that rectangle and F = lambda*.
    if (!lambda.is_rectangle() || lambda.length() != d - 1 || lambda.part(1) != e - 1) {
        std::ostringstream msg;
        msg << "no corner of " << lambda << " can be peeled for rectangle " << d << 'x' << e
            << " and the partition is not the " << (d - 1) << 'x' << (e - 1) << " rectangle";
        throw InternalGeometryError(msg.str());
    }
    const Cell s{d - 1, e - 1};
    const Polynomial z = Polynomial::variable(s);
    Transforms t = reduce_inductively(lambda.without(s), d - 1, e - 1, gen);

    PolyMatrix row_ops = PolyMatrix::identity(rows);
    for (std::size_t i = 0; i + 1 < rows; ++i)
        row_ops(i, rows - 1) = Polynomial(-1L);
    PolyMatrix col_ops = PolyMatrix::identity(cols);
    for (std::size_t j = 0; j + 1 < cols; ++j)
        col_ops(cols - 1, j) = Polynomial(-1L);

    Transforms out;
    out.P = PolyMatrix::embed_in_identity(t.P, rows, 0) * row_ops;
    out.Q = col_ops * PolyMatrix::embed_in_identity(t.Q, cols, 0);
    for (auto& p : t.diagonal)
        out.diagonal.push_back(z * p);
    out.diagonal.push_back(Polynomial::one());
    return out;
}

SnfResult certify(const PolyMatrix& w, Transforms t, SnfAlgorithm algorithm)
{
    SnfResult r;
    r.P = std::move(t.P);
    r.Q = std::move(t.Q);
    r.diagonal = std::move(t.diagonal);
    r.algorithm = algorithm;
    r.D = r.P * w * r.Q;
    const VerifyReport report = verify_snf(w, r);
    if (!report.ok)
        throw VerificationFailed(std::string(to_string(algorithm)) + " SNF failed verification: " + report.reason,
                                 report.residual);
    return r;
}

} // namespace

SnfResult snf_recurrence(const Partition& lambda)
{
    const PolyMatrix w = square_matrix(lambda, {1, 1});
    return certify(w, reduce_by_recurrence(lambda, 0), SnfAlgorithm::recurrence);
}

SnfResult snf_inductive(const Partition& lambda, int d, int e)
{
    if (d > e)
        throw InvalidRectangle("snf_inductive needs d <= e, got " + std::to_string(d) + "x" + std::to_string(e));
    WeightGenerator gen;
    const PolyMatrix w = gen.rect_matrix(lambda, d, e);
    return certify(w, reduce_inductively(lambda, d, e, gen), SnfAlgorithm::inductive);
}

SnfResult snf_rectangle(const Partition& lambda, int d, int e)
{
    if (d <= e)
        return snf_inductive(lambda, d, e);
    const SnfResult dual = snf_inductive(lambda.conjugate(), e, d);
    SnfResult r;
    r.P = dual.Q.transpose().with_transposed_variables();
    r.Q = dual.P.transpose().with_transposed_variables();
    r.D = dual.D.transpose().with_transposed_variables();
    r.P.set_origin({1, 1});
    r.Q.set_origin({1, 1});
    r.D.set_origin({1, 1});
    for (const auto& p : dual.diagonal)
        r.diagonal.push_back(p.transposed());
    r.algorithm = SnfAlgorithm::inductive;
    const PolyMatrix w = rect_weight_matrix(lambda, d, e);
    const VerifyReport report = verify_snf(w, r);
    if (!report.ok)
        throw VerificationFailed("transposed inductive SNF failed verification: " + report.reason, report.residual);
    return r;
}

VerifyReport verify_snf(const PolyMatrix& W, const SnfResult& r)
{
    if (r.P.rows() != W.rows() || r.P.cols() != W.rows() || r.Q.rows() != W.cols() || r.Q.cols() != W.cols())
        throw DimensionMismatch("transforms do not match a " + std::to_string(W.rows()) + "x" +
                                std::to_string(W.cols()) + " matrix");
    if (r.diagonal.size() != std::min(W.rows(), W.cols()))
        throw DimensionMismatch("diagonal length does not match matrix shape");

    VerifyReport rep;
    const PolyMatrix product = r.P * W * r.Q;
    rep.residual = product - normal_form_matrix(W.rows(), W.cols(), r.diagonal);
    if (!r.P.is_upper_unitriangular())
        rep.reason = "P is not upper unitriangular";
    else if (!r.Q.is_lower_unitriangular())
        rep.reason = "Q is not lower unitriangular";
    else if (!rep.residual.is_zero())
        rep.reason = "P*W*Q differs from the diagonal form";
    else if (!(r.D.rows() == 0 && r.D.cols() == 0) && !(r.D == product))
        rep.reason = "stored D differs from P*W*Q";
    rep.ok = rep.reason.empty();
    return rep;
}

Polynomial determinant(const PolyMatrix& W)
{
    if (!W.is_square())
        throw NotSquare("determinant of a " + std::to_string(W.rows()) + "x" + std::to_string(W.cols()) + " matrix");
    const std::size_t n = W.rows();
    if (n > 8)
        throw TooLarge("cofactor expansion is limited to side 8, got " + std::to_string(n));
    if (n == 0)
        return Polynomial::one();

    // minor[mask]: determinant of the leading popcount(mask) rows restricted to the columns in mask,
    // expanded along its last row.
    std::vector<Polynomial> minor(std::size_t{1} << n);
    minor[0] = Polynomial::one();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto row = static_cast<std::size_t>(std::popcount(mask) - 1);
        Polynomial acc;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1U << c)))
                continue;
            const Polynomial& entry = W(row, c);
            const Polynomial& sub = minor[mask & ~(1U << c)];
            if (entry.is_zero() || sub.is_zero())
                continue;
            const int later = std::popcount(mask >> (c + 1));
            if (later % 2 == 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

} // namespace snfpart
