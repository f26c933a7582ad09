#include "snfpart/poly_matrix.hpp"

#include "snfpart/errors.hpp"

namespace snfpart {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, Cell origin)
    : rows_(rows), cols_(cols), origin_(origin), data_(rows * cols)
{
}

PolyMatrix::PolyMatrix(std::vector<std::vector<Polynomial>> rows, Cell origin)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), origin_(origin)
{
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (auto& p : r)
            data_.push_back(std::move(p));
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n)
{
    PolyMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Polynomial::one();
    return m;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(cols_, rows_, origin_.transposed());
    for (std::size_t u = 0; u < rows_; ++u)
        for (std::size_t v = 0; v < cols_; ++v)
            t(v, u) = (*this)(u, v);
    return t;
}

PolyMatrix PolyMatrix::with_transposed_variables() const
{
    PolyMatrix t = *this;
    for (auto& p : t.data_)
        p = p.transposed();
    return t;
}

PolyMatrix PolyMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionMismatch("block exceeds matrix bounds");
    PolyMatrix b(nrows, ncols, cell_at(row0, col0));
    for (std::size_t u = 0; u < nrows; ++u)
        for (std::size_t v = 0; v < ncols; ++v)
            b(u, v) = (*this)(row0 + u, col0 + v);
    return b;
}

PolyMatrix PolyMatrix::embed_in_identity(const PolyMatrix& inner, std::size_t n, std::size_t offset)
{
    if (offset + inner.rows_ > n || offset + inner.cols_ > n)
        throw DimensionMismatch("embedded block exceeds target size");
    PolyMatrix m = identity(n);
    for (std::size_t u = 0; u < inner.rows_; ++u)
        for (std::size_t v = 0; v < inner.cols_; ++v)
            m(offset + u, offset + v) = inner(u, v);
    return m;
}

bool PolyMatrix::is_zero() const noexcept
{
    for (const auto& p : data_)
        if (!p.is_zero())
            return false;
    return true;
}

bool PolyMatrix::is_upper_unitriangular() const noexcept
{
    if (!is_square())
        return false;
    for (std::size_t u = 0; u < rows_; ++u) {
        if (!(*this)(u, u).is_one())
            return false;
        for (std::size_t v = 0; v < u; ++v)
            if (!(*this)(u, v).is_zero())
                return false;
    }
    return true;
}

bool PolyMatrix::is_lower_unitriangular() const noexcept
{
    return transpose().is_upper_unitriangular();
}

void PolyMatrix::add_row_multiple(std::size_t u, std::size_t w, const Polynomial& factor)
{
    if (factor.is_zero())
        return;
    for (std::size_t v = 0; v < cols_; ++v)
        if (!(*this)(w, v).is_zero())
            (*this)(u, v) += factor * (*this)(w, v);
}

void PolyMatrix::add_col_multiple(std::size_t v, std::size_t w, const Polynomial& factor)
{
    if (factor.is_zero())
        return;
    for (std::size_t u = 0; u < rows_; ++u)
        if (!(*this)(u, w).is_zero())
            (*this)(u, v) += (*this)(u, w) * factor;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    PolyMatrix c(a.rows_, b.cols_, a.origin_);
    for (std::size_t u = 0; u < a.rows_; ++u) {
        for (std::size_t v = 0; v < b.cols_; ++v) {
            Polynomial acc;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Polynomial& x = a(u, k);
                const Polynomial& y = b(k, v);
                if (x.is_zero() || y.is_zero())
                    continue;
                acc += x * y;
            }
            c(u, v) = std::move(acc);
        }
    }
    return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch("matrix difference of mismatched shapes");
    PolyMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] -= b.data_[k];
    return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string PolyMatrix::to_string(const VariableNaming& naming) const
{
    std::string out;
    for (std::size_t u = 0; u < rows_; ++u) {
        for (std::size_t v = 0; v < cols_; ++v) {
            if (v)
                out += " | ";
            out += render((*this)(u, v), naming);
        }
        out += '\n';
    }
    return out;
}

} // namespace snfpart
