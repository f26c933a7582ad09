#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snfpart {

// A square of a (possibly extended) Young diagram, 1-indexed.
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend bool operator==(const Cell&, const Cell&) = default;

    Cell transposed() const noexcept { return {col, row}; }
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

/**
 * An integer partition, identified with its Young diagram (English notation,
 * row r holds parts()[r-1] cells). Immutable value type.
 */
class Partition {
public:
    Partition() = default;

    // Throws NonPositive / NotDecreasing when the sequence is not a partition.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;

    // Row length lambda_r, 0 for rows past the last one (r >= 1).
    int part(int r) const noexcept;

    // Durfee square side: the largest k with lambda_k >= k.
    int rank() const noexcept;

    Partition conjugate() const;

    bool contains(Cell c) const noexcept;
    bool is_rectangle() const noexcept;

    /**
     * Partition formed by the cells (u,v) of this diagram with u >= c.row and
     * v >= c.col, re-anchored at (1,1). Throws CellOutOfRange unless c lies in
     * the extended diagram.
     */
    Partition subdiagram(Cell c) const;

    // As subdiagram(), but defined for any cell (cells past the rim give the empty partition).
    Partition region_from(Cell c) const;

    // Corner cells (a, lambda_a) whose removal leaves a partition. Throws EmptyPartition.
    std::vector<Cell> removable_corners() const;

    // Removes a removable corner; throws CellOutOfRange otherwise.
    Partition without(Cell corner) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Comma-separated parts, empty text for the empty partition.
Partition parse_partition(std::string_view text);

/**
 * The extended diagram lambda*: lambda together with the border strip running
 * from the end of row 1 to the end of column 1. Row r of lambda* has length
 * lambda_{r-1} + 1 for 2 <= r <= l+1 and lambda_1 + 1 for r = 1.
 */
class ExtendedDiagram {
public:
    explicit ExtendedDiagram(Partition base);

    const Partition& base() const noexcept { return base_; }

    // Row lengths of lambda* (itself a partition shape).
    const std::vector<int>& row_lengths() const& noexcept { return rows_; }
    std::vector<int> row_lengths() && { return std::move(rows_); }
    int rows() const noexcept { return static_cast<int>(rows_.size()); }
    int row_length(int r) const noexcept;

    // All cells of lambda*, row-major.
    const std::vector<Cell>& cells() const& noexcept { return cells_; }
    std::vector<Cell> cells() && { return std::move(cells_); }
    // Cells of lambda* \ lambda, row-major.
    const std::vector<Cell>& border() const& noexcept { return border_; }
    std::vector<Cell> border() && { return std::move(border_); }

    bool contains(Cell c) const noexcept;
    bool on_border(Cell c) const noexcept;

private:
    Partition base_;
    std::vector<int> rows_;
    std::vector<Cell> cells_;
    std::vector<Cell> border_;
};

ExtendedDiagram extended_cells(const Partition& p);

// Visits every partition mu with mu_k <= p_k, in lexicographic order of parts.
void for_each_contained(const Partition& p, const std::function<void(const Partition&)>& visit);
std::vector<Partition> contained_partitions(const Partition& p);

// Number of sub-partitions, counted by walking lattice paths under the rim of p.
std::uint64_t count_contained_by_paths(const Partition& p);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

} // namespace snfpart
