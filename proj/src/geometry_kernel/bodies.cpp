#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace funcbody {

namespace {

// Sum over simplices of vol * centroid.
Vector simplicial_moment(const std::vector<std::vector<Vector>>& simplices, int n) {
  Vector m = Vector::Zero(n);
  for (const auto& s : simplices) {
    Vector c = Vector::Zero(n);
    for (const auto& v : s) c += v;
    c /= static_cast<double>(s.size());
    m += detail::simplex_volume(s) * c;
  }
  return m;
}

// int over the simplex of max(x.z, 0).
double positive_part_integral(const std::vector<Vector>& simplex, const Vector& z) {
  const int n = static_cast<int>(z.size());
  std::vector<double> f;
  for (const auto& v : simplex) f.push_back(v.dot(z));
  const bool all_pos = std::all_of(f.begin(), f.end(), [](double x) { return x >= 0.0; });
  const bool all_neg = std::all_of(f.begin(), f.end(), [](double x) { return x <= 0.0; });
  if (all_neg) return 0.0;
  if (all_pos) return simplicial_moment({simplex}, n).dot(z);
  std::vector<Vector> clipped;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (f[i] >= 0.0) clipped.push_back(simplex[i]);
    for (std::size_t j = i + 1; j < simplex.size(); ++j) {
      if ((f[i] > 0.0 && f[j] < 0.0) || (f[i] < 0.0 && f[j] > 0.0)) {
        const double lambda = f[i] / (f[i] - f[j]);
        clipped.push_back(simplex[i] + lambda * (simplex[j] - simplex[i]));
      }
    }
  }
  const Polytope piece = convex_hull(clipped);
  if (!piece.full_dimensional()) return 0.0;
  return simplicial_moment(triangulate(piece), n).dot(z);
}

}  // namespace

Polytope projection_body(const Polytope& p) {
  const DiscreteSphericalMeasure sam = surface_area_measure(p);
  const int n = p.ambient_dim();
  // Parallel generators merge into one segment.
  std::vector<Atom> generators;
  for (const auto& a : sam.atoms()) {
    const Vector dir = detail::canonical_sign(a.direction);
    auto it = std::find_if(generators.begin(), generators.end(), [&](const Atom& g) {
      return (g.direction - dir).norm() <= kAngularTol;
    });
    if (it == generators.end()) {
      generators.push_back({dir, a.weight});
    } else {
      it->weight += a.weight;
    }
  }
  Polytope body = point_polytope(Vector::Zero(n));
  for (const auto& g : generators) {
    const Vector half = 0.5 * g.weight * g.direction;
    std::vector<Vector> pts;
    for (const auto& v : body.vertices()) {
      pts.push_back(v + half);
      pts.push_back(v - half);
    }
    body = convex_hull(pts);
  }
  return body;
}

double projection_body_support(const Polytope& p, const Vector& z) {
  return 0.5 * cosine_transform(surface_area_measure(p), z);
}

Polytope difference_body(const Polytope& p) { return minkowski_sum(p, reflect(p)); }

Vector moment_vector(const Polytope& p) {
  if (!p.full_dimensional()) throw GeometryError("moment vector requires a full-dimensional body");
  return simplicial_moment(triangulate(p), p.ambient_dim());
}

double moment_body_support(const Polytope& p, const Vector& z) {
  if (!p.full_dimensional()) throw GeometryError("moment body requires a full-dimensional body");
  if (z.size() != p.ambient_dim()) throw InvalidArgument("dimension mismatch");
  const auto simplices = triangulate(p);
  double signed_part = simplicial_moment(simplices, p.ambient_dim()).dot(z);
  double positive = 0.0;
  for (const auto& s : simplices) positive += positive_part_integral(s, z);
  return 2.0 * positive - signed_part;
}

void write_off(const Polytope& p, std::ostream& out) {
  if (p.ambient_dim() != 3 || !p.full_dimensional()) {
    throw InvalidArgument("OFF export needs a full-dimensional 3D polytope");
  }
  const auto facets = p.facets();
  const auto& verts = p.vertices();
  char buf[96];
  out << "OFF\n" << verts.size() << ' ' << facets.size() << " 0\n";
  for (const auto& v : verts) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << buf;
  }
  for (const auto& f : facets) {
    Vector c = Vector::Zero(3);
    for (int j : f.vertices) c += verts[j];
    c /= static_cast<double>(f.vertices.size());
    const Matrix basis = detail::complement_basis(f.normal);
    const Eigen::Vector3d e1 = basis.col(0);
    Eigen::Vector3d e2 = basis.col(1);
    if (e1.cross(e2).dot(Eigen::Vector3d(f.normal)) < 0) e2 = -e2;
    std::vector<std::pair<double, int>> ring;
    for (int j : f.vertices) {
      const Eigen::Vector3d d = verts[j] - c;
      ring.push_back({std::atan2(e2.dot(d), e1.dot(d)), j});
    }
    std::sort(ring.begin(), ring.end());
    out << ring.size();
    for (const auto& r : ring) out << ' ' << r.second;
    out << '\n';
  }
}

}  // namespace funcbody
