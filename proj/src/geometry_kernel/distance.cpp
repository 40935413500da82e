#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace funcbody {

namespace {

// Wolfe's minimum norm point in conv(points).
Vector min_norm_point(const std::vector<Vector>& y) {
  const int m = static_cast<int>(y.size());
  double scale = 0.0;
  for (const auto& p : y) scale = std::max(scale, p.squaredNorm());
  const double eps = 1e-13 * std::max(scale, 1e-300);

  int first = 0;
  for (int i = 1; i < m; ++i) {
    if (y[i].squaredNorm() < y[first].squaredNorm()) first = i;
  }
  std::vector<int> s{first};
  std::vector<double> lambda{1.0};
  Vector w = y[first];

  for (int iter = 0; iter < 100 * m + 100; ++iter) {
    if (w.squaredNorm() <= eps) return w;
    int j = 0;
    for (int i = 1; i < m; ++i) {
      if (w.dot(y[i]) < w.dot(y[j])) j = i;
    }
    if (w.squaredNorm() - w.dot(y[j]) <= eps) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) break;
    s.push_back(j);
    lambda.push_back(0.0);

    while (true) {
      const int k = static_cast<int>(s.size());
      Matrix kkt = Matrix::Zero(k + 1, k + 1);
      Vector rhs = Vector::Zero(k + 1);
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) kkt(a, b) = y[s[a]].dot(y[s[b]]);
        kkt(a, k) = 1.0;
        kkt(k, a) = 1.0;
      }
      rhs[k] = 1.0;
      const Vector mu = kkt.completeOrthogonalDecomposition().solve(rhs);
      bool interior = true;
      for (int a = 0; a < k; ++a) interior = interior && mu[a] > 1e-14;
      if (interior) {
        for (int a = 0; a < k; ++a) lambda[a] = mu[a];
        break;
      }
      double theta = 1.0;
      for (int a = 0; a < k; ++a) {
        if (mu[a] <= 1e-14 && lambda[a] - mu[a] > 0.0) {
          theta = std::min(theta, lambda[a] / (lambda[a] - mu[a]));
        }
      }
      std::vector<int> s2;
      std::vector<double> l2;
      for (int a = 0; a < k; ++a) {
        const double v = lambda[a] + theta * (mu[a] - lambda[a]);
        if (v > 1e-14) {
          s2.push_back(s[a]);
          l2.push_back(v);
        }
      }
      if (s2.empty()) {
        s2 = {s.back()};
        l2 = {1.0};
      }
      s = std::move(s2);
      lambda = std::move(l2);
    }
    w = Vector::Zero(y.front().size());
    double total = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a) total += lambda[a];
    for (std::size_t a = 0; a < s.size(); ++a) w += (lambda[a] / total) * y[s[a]];
  }
  return w;
}

}  // namespace

double distance(const Polytope& p, const Vector& x) {
  if (x.size() != p.ambient_dim()) throw InvalidArgument("dimension mismatch");
  std::vector<Vector> shifted;
  shifted.reserve(p.size());
  for (const auto& v : p.vertices()) shifted.push_back(v - x);
  return min_norm_point(shifted).norm();
}

double hausdorff_distance(const Polytope& p, const Polytope& q) {
  double d = 0.0;
  for (const auto& v : p.vertices()) d = std::max(d, distance(q, v));
  for (const auto& v : q.vertices()) d = std::max(d, distance(p, v));
  return d;
}

}  // namespace funcbody
