#pragma once

#include "snfpart/partition.hpp"
#include "snfpart/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace snfpart {

/**
 * Dense row-major matrix over Z[x_ij]. `origin` records the cell of the
 * extended diagram that entry (0,0) was read from; entry (u,v) then sits at
 * cell (origin.row + u, origin.col + v). Transforms use origin (1,1).
 */
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, Cell origin = {1, 1});
    PolyMatrix(std::vector<std::vector<Polynomial>> rows, Cell origin = {1, 1});

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    Cell origin() const noexcept { return origin_; }
    void set_origin(Cell c) noexcept { origin_ = c; }

    Polynomial& operator()(std::size_t u, std::size_t v) { return data_[u * cols_ + v]; }
    const Polynomial& operator()(std::size_t u, std::size_t v) const { return data_[u * cols_ + v]; }

    // Cell of the extended diagram behind entry (u,v).
    Cell cell_at(std::size_t u, std::size_t v) const noexcept
    {
        return {origin_.row + static_cast<int>(u), origin_.col + static_cast<int>(v)};
    }

    PolyMatrix transpose() const;
    // Applies Polynomial::transposed() to every entry.
    PolyMatrix with_transposed_variables() const;
    PolyMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    // Places `inner` at (offset, offset) of an identity matrix of side n.
    static PolyMatrix embed_in_identity(const PolyMatrix& inner, std::size_t n, std::size_t offset);

    bool is_zero() const noexcept;
    bool is_upper_unitriangular() const noexcept;
    bool is_lower_unitriangular() const noexcept;

    // Row u += factor * row w.
    void add_row_multiple(std::size_t u, std::size_t w, const Polynomial& factor);
    // Column v += factor * column w.
    void add_col_multiple(std::size_t v, std::size_t w, const Polynomial& factor);

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    // Compares shape and entries; origin is metadata and ignored.
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    // One row per line, entries separated by " | ".
    std::string to_string(const VariableNaming& naming = VariableNaming::coords()) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Cell origin_{1, 1};
    std::vector<Polynomial> data_;
};

} // namespace snfpart
