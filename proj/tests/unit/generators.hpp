#pragma once

// Seeded generators for property tests.

#include "funcbody/convex_functions.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "funcbody/weight_functions.hpp"

#include <cmath>
#include <initializer_list>
#include <random>
#include <vector>

namespace funcbody::testing {

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vector point(int n, double r = 1.0) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform(-r, r);
    return v;
  }

  Vector direction(int n) {
    std::normal_distribution<double> g;
    Vector v(n);
    do {
      for (int i = 0; i < n; ++i) v[i] = g(rng_);
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  std::vector<Vector> cloud(int n, int count, double r = 1.0) {
    std::vector<Vector> pts;
    for (int i = 0; i < count; ++i) pts.push_back(point(n, r));
    return pts;
  }

  /// Random full-dimensional polytope with 0 in its interior.
  Polytope body(int n, int extra = 6) {
    std::vector<Vector> pts = cloud(n, extra);
    for (int i = 0; i < n; ++i) {
      pts.push_back(uniform(0.2, 0.6) * unit_vector(n, i));
      pts.push_back(-uniform(0.2, 0.6) * unit_vector(n, i));
    }
    return convex_hull(pts);
  }

  /// Random decreasing piecewise-linear weight.
  WeightFunction weight() {
    const int k = integer(2, 4);
    std::vector<double> t{uniform(-0.5, 0.0)}, v{uniform(0.5, 1.5)};
    for (int i = 1; i < k; ++i) {
      t.push_back(t.back() + uniform(0.1, 0.6));
      v.push_back(i + 1 == k ? 0.0 : v.back() * uniform(0.0, 1.0));
    }
    return WeightFunction(t, v);
  }

  Matrix matrix(int n) {
    Matrix m(n, n);
    do {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = uniform(-1.0, 1.0);
      }
    } while (std::abs(m.determinant()) < 0.2);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace funcbody::testing
