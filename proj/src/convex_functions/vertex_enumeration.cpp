#include "vertex_enumeration.hpp"

#include <cmath>
#include <numeric>

namespace funcbody::detail {

namespace {

using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 5, 5>;
using SmallVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 5, 1>;

}  // namespace

bool normalize_rows(std::vector<Row>& rows, double tol) {
  std::vector<Row> kept;
  kept.reserve(rows.size());
  for (auto& row : rows) {
    const double len = row.g.norm();
    if (len < 1e-14) {
      if (row.r < -tol) return false;
      continue;
    }
    kept.push_back({row.g / len, row.r / len});
  }
  rows = std::move(kept);
  return true;
}

std::vector<Vector> enumerate_vertices(const std::vector<Row>& rows, int k, double tol) {
  std::vector<Vector> out;
  const int m = static_cast<int>(rows.size());
  if (m < k) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  SmallMatrix a(k, k);
  SmallVector rhs(k);
  while (true) {
    for (int i = 0; i < k; ++i) {
      a.row(i) = rows[idx[i]].g.transpose();
      rhs[i] = rows[idx[i]].r;
    }
    Eigen::FullPivLU<SmallMatrix> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() == k) {
      const Vector y = lu.solve(rhs);
      bool feasible = y.allFinite();
      for (int j = 0; j < m && feasible; ++j) {
        feasible = rows[j].g.dot(y) <= rows[j].r + tol;
      }
      if (feasible) out.push_back(y);
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace funcbody::detail
