#pragma once

#include "snfpart/partition.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace snfpart {

struct SuiteTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures; // first few failure descriptions
};

struct SelftestReport {
    int max_size = 0;
    std::size_t partitions = 0;
    std::vector<SuiteTally> suites;

    bool ok() const noexcept;
};

/**
 * Exhaustive identity checks over every partition of size <= max_size:
 * recurrence residuals, Omega term counts, agreement of both SNF routes,
 * diagonal = A_kk, determinant = prod A_kk (side <= 6), and the inductive
 * SNF on every border rectangle.
 */
SelftestReport run_selftest(int max_size);

// The same checks for a single partition, accumulated into `report`.
void selftest_partition(const Partition& lambda, SelftestReport& report);

} // namespace snfpart
