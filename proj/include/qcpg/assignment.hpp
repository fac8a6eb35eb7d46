#pragma once

#include <cstdint>
#include <vector>

namespace qcpg {

struct Assignment {
  std::int64_t cost = 0;
  std::vector<int> column_of_row;  // row i is assigned column column_of_row[i]
};

// Minimum-cost perfect assignment on a square matrix (Hungarian method with
// potentials, O(n^3)). `cost` is row-major, n x n.
Assignment solve_assignment(const std::vector<std::int64_t>& cost, int n);

}  // namespace qcpg
