#include "funcbody/errors.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace funcbody {

namespace {

void require_dims(const Polytope& p, const Vector& z) {
  if (z.size() != p.ambient_dim()) throw InvalidArgument("dimension mismatch");
}

}  // namespace

Polytope convex_hull(const std::vector<Vector>& points) {
  if (points.empty()) throw InvalidArgument("empty point set");
  const Eigen::Index n = points.front().size();
  if (n < 1 || n > kMaxDim) throw InvalidArgument("unsupported dimension");
  for (const auto& p : points) {
    if (p.size() != n) throw InvalidArgument("mixed point dimensions");
    if (!p.allFinite()) throw InvalidArgument("non-finite coordinate");
  }
  const double tol = kCoordTol * detail::coordinate_scale(points);
  std::vector<Vector> pts = detail::dedupe(points, tol);
  const detail::AffineFrame frame = detail::affine_frame(pts, tol);

  Polytope out;
  out.ambient_dim_ = static_cast<int>(n);
  out.affine_dim_ = frame.dim;
  out.basis_ = frame.basis;
  out.complement_ = frame.complement;

  if (frame.dim == 0) {
    out.origin_ = pts.front();
    out.vertices_ = {pts.front()};
    out.local_vertices_ = {Vector(0)};
    return out;
  }
  out.origin_ = frame.origin;

  std::vector<Vector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(frame.basis.transpose() * (p - frame.origin));
  const detail::LocalHull hull = detail::hull_full(local, tol);

  std::vector<int> order = hull.extreme;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return detail::lex_less(pts[a], pts[b], tol); });
  std::vector<int> remap(pts.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<int>(k);
    out.vertices_.push_back(pts[order[k]]);
    out.local_vertices_.push_back(local[order[k]]);
  }
  for (const auto& f : hull.facets) {
    Facet g{f.normal, f.offset, {}};
    for (int j : f.vertices) {
      if (remap[j] >= 0) g.vertices.push_back(remap[j]);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    out.local_facets_.push_back(std::move(g));
  }
  return out;
}

std::vector<Facet> Polytope::facets() const {
  std::vector<Facet> out;
  out.reserve(local_facets_.size());
  for (const auto& f : local_facets_) {
    Vector normal = basis_ * f.normal;
    out.push_back({normal, f.offset + normal.dot(origin_), f.vertices});
  }
  return out;
}

std::vector<Halfspace> Polytope::halfspaces() const {
  std::vector<Halfspace> out;
  for (const auto& f : facets()) out.push_back({f.normal, f.offset});
  for (Eigen::Index k = 0; k < complement_.cols(); ++k) {
    const Vector w = complement_.col(k);
    const double off = w.dot(origin_);
    out.push_back({w, off});
    out.push_back({-w, -off});
  }
  return out;
}

bool Polytope::contains(const Vector& x, double tol) const {
  require_dims(*this, x);
  for (const auto& h : halfspaces()) {
    if (h.normal.dot(x) > h.offset + tol) return false;
  }
  return true;
}

Vector Polytope::vertex_centroid() const {
  Vector c = Vector::Zero(ambient_dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double support(const Polytope& p, const Vector& z) {
  require_dims(p, z);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, z.dot(v));
  return best;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InvalidArgument("dimension mismatch");
  std::vector<Vector> pts;
  pts.reserve(p.size() * q.size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  }
  return convex_hull(pts);
}

Polytope linear_image(const Polytope& p, const Matrix& m) {
  if (m.rows() != p.ambient_dim() || m.cols() != p.ambient_dim()) {
    throw InvalidArgument("dimension mismatch");
  }
  std::vector<Vector> pts;
  pts.reserve(p.size());
  for (const auto& v : p.vertices()) pts.push_back(m * v);
  return convex_hull(pts);
}

Polytope linear_image(const Polytope& p, const UnimodularMap& phi) {
  return linear_image(p, phi.matrix());
}

Polytope translate(const Polytope& p, const Vector& x) {
  require_dims(p, x);
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + x);
  return convex_hull(pts);
}

Polytope reflect(const Polytope& p) { return scale(p, -1.0); }

Polytope scale(const Polytope& p, double factor) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(factor * v);
  return convex_hull(pts);
}

Polytope point_polytope(const Vector& x) { return convex_hull({x}); }

Polytope unit_cube(int n) {
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return convex_hull(pts);
}

Polytope centered_cube(int n) {
  const Polytope cube = unit_cube(n);
  std::vector<Vector> pts;
  for (const auto& v : cube.vertices()) pts.push_back(2.0 * v - Vector::Ones(n));
  return convex_hull(pts);
}

Polytope cross_polytope(int n) {
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(unit_vector(n, i));
    pts.push_back(-unit_vector(n, i));
  }
  return convex_hull(pts);
}

Polytope standard_simplex(int n) { return stretched_simplex(n, 1.0); }

Polytope stretched_simplex(int n, double s) {
  std::vector<Vector> pts{Vector::Zero(n)};
  pts.push_back(s * unit_vector(n, 0));
  for (int i = 1; i < n; ++i) pts.push_back(unit_vector(n, i));
  return convex_hull(pts);
}

namespace {

std::vector<std::vector<Vector>> local_triangulation(const Polytope& p) {
  const int d = p.affine_dim();
  const auto& local = p.local_vertices();
  detail::LocalHull hull;
  hull.extreme.resize(local.size());
  std::iota(hull.extreme.begin(), hull.extreme.end(), 0);
  hull.facets = p.local_facets();
  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 0; i < static_cast<int>(local.size()); ++i) {
      if (local[i][0] < local[lo][0]) lo = i;
      if (local[i][0] > local[hi][0]) hi = i;
    }
    hull.extreme = {lo, hi};
  }
  const double tol = kCoordTol * detail::coordinate_scale(p.vertices());
  return detail::fan_simplices(local, hull, tol);
}

}  // namespace

std::vector<std::vector<Vector>> triangulate(const Polytope& p) {
  if (p.affine_dim() == 0) return {{p.vertices().front()}};
  std::vector<std::vector<Vector>> out;
  for (const auto& s : local_triangulation(p)) {
    std::vector<Vector> lifted;
    for (const auto& y : s) lifted.push_back(p.frame_origin() + p.frame_basis() * y);
    out.push_back(std::move(lifted));
  }
  return out;
}

double volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0.0;
  return affine_volume(p);
}

double affine_volume(const Polytope& p) {
  if (p.affine_dim() == 0) return 1.0;
  double v = 0.0;
  for (const auto& s : local_triangulation(p)) v += detail::simplex_volume(s);
  return v;
}

Polytope subspace_projection(const Polytope& p, const std::vector<Vector>& basis) {
  if (basis.empty()) throw InvalidArgument("empty projection basis");
  const int k = static_cast<int>(basis.size());
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) {
    Vector y(k);
    for (int i = 0; i < k; ++i) {
      if (basis[i].size() != p.ambient_dim()) throw InvalidArgument("dimension mismatch");
      y[i] = basis[i].dot(v);
    }
    pts.push_back(y);
  }
  return convex_hull(pts);
}

std::vector<Vector> orthogonal_complement(const Vector& z) {
  const double len = z.norm();
  if (len == 0.0) throw InvalidArgument("zero direction");
  const Matrix basis = detail::complement_basis(z / len);
  std::vector<Vector> out;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) out.push_back(basis.col(i));
  return out;
}

Vector unit_vector(int n, int i) {
  Vector e = Vector::Zero(n);
  e[i] = 1.0;
  return e;
}

}  // namespace funcbody
