#pragma once

#include "funcbody/geometry_kernel.hpp"

#include <vector>

namespace funcbody::detail {

struct Row {
  Vector g;
  double r = 0.0;
};

/// Scales each row to a unit normal. Returns false if a zero row is violated
/// (the system is infeasible); satisfied zero rows are dropped.
bool normalize_rows(std::vector<Row>& rows, double tol);

/// Vertices of {y in R^k : g_i . y <= r_i}, one per nonsingular k-subset of
/// rows that satisfies every row within `tol`; duplicates are not removed.
std::vector<Vector> enumerate_vertices(const std::vector<Row>& rows, int k, double tol);

}  // namespace funcbody::detail
