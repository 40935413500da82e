#include "funcbody/convex_functions.hpp"
#include "funcbody/errors.hpp"

#include <algorithm>
#include <cmath>

namespace funcbody {

namespace {

constexpr double kUnionTol = 1e-8;

double distance_to_union(const Polytope& a, const Polytope& b, const Vector& x) {
  if (a.contains(x, kUnionTol) || b.contains(x, kUnionTol)) return 0.0;
  return std::min(distance(a, x), distance(b, x));
}

// Worst distance from sampled points of conv(A u B) to A u B.
double union_defect(const Polytope& a, const Polytope& b) {
  std::vector<Vector> pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  const Polytope hull = convex_hull(pts);
  double worst = 0.0;
  for (const auto& x : a.vertices()) {
    for (const auto& y : b.vertices()) {
      for (int k = 1; k < 8; ++k) {
        const double lambda = k / 8.0;
        worst = std::max(worst, distance_to_union(a, b, (1 - lambda) * x + lambda * y));
      }
    }
  }
  if (hull.affine_dim() >= 1) {
    for (const auto& f : hull.facets()) {
      Vector c = Vector::Zero(hull.ambient_dim());
      for (int j : f.vertices) c += hull.vertices()[j];
      c /= static_cast<double>(f.vertices.size());
      worst = std::max(worst, distance_to_union(a, b, c));
    }
  }
  return worst;
}

std::vector<double> probe_levels_for(const PiecewiseAffineConvex& u,
                                     const PiecewiseAffineConvex& v) {
  std::vector<double> events = u.event_levels();
  events.insert(events.end(), v.event_levels().begin(), v.event_levels().end());
  std::sort(events.begin(), events.end());
  const double lo = events.front();
  const double hi = events.back() + (events.back() - lo) + 1.0;
  std::vector<double> levels = events;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    levels.push_back(0.5 * (events[i] + events[i + 1]));
  }
  for (int k = 0; k <= 31; ++k) levels.push_back(lo + (hi - lo) * k / 31.0);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace

LatticePair pointwise_min_certified(const PiecewiseAffineConvex& u,
                                    const PiecewiseAffineConvex& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("dimension mismatch");
  LatticePair pair{u, v, false, 0.0, probe_levels_for(u, v)};
  for (double t : pair.probe_levels) {
    const auto a = u.sublevel(t);
    const auto b = v.sublevel(t);
    if (!a || !b) continue;
    pair.max_defect = std::max(pair.max_defect, union_defect(*a, *b));
  }
  pair.certified = pair.max_defect <= kUnionTol;
  return pair;
}

LatticeMin lattice_min(const LatticePair& pair) {
  if (!pair.certified) throw InvalidArgument("lattice pair is not certified");
  return LatticeMin(pair.u, pair.v);
}

}  // namespace funcbody
