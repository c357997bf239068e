#pragma once

#include <utility>
#include <vector>

#include <mptrack/cost_matrix.hpp>

namespace mptrack {

// One-to-one row/column pairing. Every row and column index appears exactly
// once across pairs and the unmatched lists; pairs are sorted by row.
struct Assignment {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> unmatched_rows;
    std::vector<int> unmatched_cols;
    double total_cost = 0.0;

    bool operator==(const Assignment&) const = default;
};

// Minimum-cost assignment of maximum cardinality; gated entries are never
// selected. Among equal-cost optima the pair set lowest in (row, col)
// lexicographic order wins. Pairs costing more than `threshold` are demoted
// to unmatched after solving.
Assignment solve(const CostMatrix& cm, double threshold);

// Exact optimum by enumeration over row-to-column injections, using the
// same cardinality, cost and tie-break ordering as solve(). Capped at
// min(rows, cols) <= 8.
Assignment solve_bruteforce(const CostMatrix& cm);

}  // namespace mptrack
