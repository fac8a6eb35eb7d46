#include "qcpg/assignment.hpp"

#include <limits>

namespace qcpg {

Assignment solve_assignment(const std::vector<std::int64_t>& cost, int n) {
  Assignment result;
  result.column_of_row.assign(n, -1);
  if (n == 0) return result;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based potentials; row_of_col[0] is the row currently being inserted.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> row_of_col(n + 1, 0), way(n + 1, 0);
  auto at = [&](int r, int c) { return cost[static_cast<std::size_t>(r - 1) * n + (c - 1)]; };

  for (int row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    int col0 = 0;
    std::vector<std::int64_t> min_slack(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[col0] = 1;
      const int r0 = row_of_col[col0];
      std::int64_t delta = kInf;
      int col1 = 0;
      for (int c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const std::int64_t slack = at(r0, c) - u[r0] - v[c];
        if (slack < min_slack[c]) {
          min_slack[c] = slack;
          way[c] = col0;
        }
        if (min_slack[c] < delta) {
          delta = min_slack[c];
          col1 = c;
        }
      }
      for (int c = 0; c <= n; ++c) {
        if (used[c]) {
          u[row_of_col[c]] += delta;
          v[c] -= delta;
        } else {
          min_slack[c] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const int col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  for (int c = 1; c <= n; ++c) result.column_of_row[row_of_col[c] - 1] = c - 1;
  for (int r = 0; r < n; ++r) result.cost += at(r + 1, result.column_of_row[r] + 1);
  return result;
}

}  // namespace qcpg
