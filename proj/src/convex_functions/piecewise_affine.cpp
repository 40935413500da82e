#include "funcbody/convex_functions.hpp"
#include "funcbody/errors.hpp"
#include "vertex_enumeration.hpp"

#include <algorithm>
#include <cmath>

namespace funcbody {

namespace {

int infer_dim(const std::vector<AffinePiece>& pieces, const std::vector<Halfspace>& domain,
              int dim) {
  if (dim < 0 && !pieces.empty()) dim = static_cast<int>(pieces.front().a.size());
  if (dim < 0 && !domain.empty()) dim = static_cast<int>(domain.front().normal.size());
  if (dim < 1 || dim > kMaxDim) throw InvalidArgument("unsupported function dimension");
  for (const auto& p : pieces) {
    if (p.a.size() != dim || !p.a.allFinite() || !std::isfinite(p.b)) {
      throw InvalidArgument("invalid affine piece");
    }
  }
  for (const auto& h : domain) {
    if (h.normal.size() != dim || !h.normal.allFinite() || !std::isfinite(h.offset)) {
      throw InvalidArgument("invalid domain halfspace");
    }
  }
  return dim;
}

double rhs_scale(const std::vector<detail::Row>& rows) {
  double s = 1.0;
  for (const auto& r : rows) s = std::max(s, std::abs(r.r));
  return s;
}

std::vector<double> unique_sorted(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || x - out.back() > 1e-10 * std::max(1.0, std::abs(x))) out.push_back(x);
  }
  return out;
}

std::vector<double> epigraph_vertex_heights(const std::vector<AffinePiece>& pieces,
                                            const std::vector<Halfspace>& domain, int n) {
  std::vector<detail::Row> rows;
  for (const auto& p : pieces) {
    Vector g(n + 1);
    g << p.a, -1.0;
    rows.push_back({g, -p.b});
  }
  for (const auto& h : domain) {
    Vector g(n + 1);
    g << h.normal, 0.0;
    rows.push_back({g, h.offset});
  }
  if (!detail::normalize_rows(rows, 1e-12)) return {};
  const double tol = 1e-9 * rhs_scale(rows);
  std::vector<double> heights;
  for (const auto& y : detail::enumerate_vertices(rows, n + 1, tol)) heights.push_back(y[n]);
  return unique_sorted(std::move(heights));
}

}  // namespace

PiecewiseAffineConvex::PiecewiseAffineConvex(std::vector<AffinePiece> pieces,
                                             std::vector<Halfspace> domain, int dim)
    : dim_(infer_dim(pieces, domain, dim)), pieces_(std::move(pieces)), domain_(std::move(domain)) {
  if (pieces_.empty()) pieces_.push_back({Vector::Zero(dim_), 0.0});
  if (!is_coercive(pieces_, domain_, dim_)) throw InvalidArgument("function is not coercive");
  events_ = epigraph_vertex_heights(pieces_, domain_, dim_);
  if (events_.empty()) throw InvalidArgument("empty domain");
}

bool PiecewiseAffineConvex::is_coercive(const std::vector<AffinePiece>& pieces,
                                        const std::vector<Halfspace>& domain, int dim) {
  std::vector<detail::Row> rows;
  for (const auto& p : pieces) rows.push_back({p.a, 0.0});
  for (const auto& h : domain) rows.push_back({h.normal, 0.0});
  for (int i = 0; i < dim; ++i) {
    rows.push_back({unit_vector(dim, i), 1.0});
    rows.push_back({-unit_vector(dim, i), 1.0});
  }
  detail::normalize_rows(rows, 0.0);
  for (const auto& y : detail::enumerate_vertices(rows, dim, 1e-12)) {
    if (y.norm() > 1e-9) return false;
  }
  return true;
}

double PiecewiseAffineConvex::evaluate(const Vector& x) const {
  if (x.size() != dim_) throw InvalidArgument("dimension mismatch");
  for (const auto& h : domain_) {
    if (h.normal.dot(x) > h.offset + 1e-12 * std::max(1.0, std::abs(h.offset))) return kInfinity;
  }
  double best = -kInfinity;
  for (const auto& p : pieces_) best = std::max(best, p.a.dot(x) + p.b);
  return best;
}

std::optional<Polytope> PiecewiseAffineConvex::sublevel(double t) const {
  std::vector<detail::Row> rows;
  for (const auto& p : pieces_) rows.push_back({p.a, t - p.b});
  for (const auto& h : domain_) rows.push_back({h.normal, h.offset});
  const double tol = 1e-9 * rhs_scale(rows);
  if (!detail::normalize_rows(rows, tol)) return std::nullopt;
  std::vector<Vector> pts = detail::enumerate_vertices(rows, dim_, tol);
  if (pts.empty()) return std::nullopt;
  return convex_hull(pts);
}

double PiecewiseAffineConvex::minimum_by_bisection(double tol) const {
  double hi = 1.0;
  while (!sublevel(hi)) hi = 2.0 * hi + 1.0;
  double step = 1.0;
  double lo = hi - step;
  while (sublevel(lo)) {
    hi = lo;
    step *= 2.0;
    lo -= step;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (sublevel(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// ---------------------------------------------------------------------------

LatticeMin::LatticeMin(PiecewiseAffineConvex u, PiecewiseAffineConvex v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.dim() != v_.dim()) throw InvalidArgument("dimension mismatch");
  std::vector<double> all = u_.event_levels();
  all.insert(all.end(), v_.event_levels().begin(), v_.event_levels().end());
  events_ = unique_sorted(std::move(all));
}

double LatticeMin::evaluate(const Vector& x) const {
  return std::min(u_.evaluate(x), v_.evaluate(x));
}

std::optional<Polytope> LatticeMin::sublevel(double t) const {
  auto a = u_.sublevel(t);
  auto b = v_.sublevel(t);
  if (!a) return b;
  if (!b) return a;
  std::vector<Vector> pts = a->vertices();
  pts.insert(pts.end(), b->vertices().begin(), b->vertices().end());
  return convex_hull(pts);
}

int dim(const ConvexFunction& f) {
  return std::visit([](const auto& g) { return g.dim(); }, f);
}

double evaluate(const ConvexFunction& f, const Vector& x) {
  return std::visit([&](const auto& g) { return g.evaluate(x); }, f);
}

std::optional<Polytope> sublevel(const ConvexFunction& f, double t) {
  return std::visit([&](const auto& g) { return g.sublevel(t); }, f);
}

const std::vector<double>& event_levels(const ConvexFunction& f) {
  return std::visit([](const auto& g) -> const std::vector<double>& { return g.event_levels(); },
                    f);
}

double minimum(const ConvexFunction& f) {
  return std::visit([](const auto& g) { return g.minimum(); }, f);
}

// ---------------------------------------------------------------------------

PiecewiseAffineConvex pointwise_max(const PiecewiseAffineConvex& u,
                                    const PiecewiseAffineConvex& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("dimension mismatch");
  std::vector<AffinePiece> pieces = u.pieces();
  for (const auto& p : v.pieces()) {
    const bool dup = std::any_of(pieces.begin(), pieces.end(), [&](const AffinePiece& q) {
      return q.a == p.a && q.b == p.b;
    });
    if (!dup) pieces.push_back(p);
  }
  std::vector<Halfspace> domain = u.domain();
  for (const auto& h : v.domain()) {
    const bool dup = std::any_of(domain.begin(), domain.end(), [&](const Halfspace& g) {
      return g.normal == h.normal && g.offset == h.offset;
    });
    if (!dup) domain.push_back(h);
  }
  return PiecewiseAffineConvex(std::move(pieces), std::move(domain), u.dim());
}

PiecewiseAffineConvex cone_function(const Polytope& k) {
  const int n = k.ambient_dim();
  const double tol = 1e-10;
  std::vector<AffinePiece> pieces;
  std::vector<Halfspace> domain;
  for (const auto& h : k.halfspaces()) {
    if (h.offset < -tol) throw InvalidArgument("cone function needs 0 in K");
    if (h.offset > tol) {
      pieces.push_back({h.normal / h.offset, 0.0});
    } else {
      domain.push_back({h.normal, 0.0});
    }
  }
  PiecewiseAffineConvex f(std::move(pieces), std::move(domain), n);
  double scale = 1.0;
  for (const auto& v : k.vertices()) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  const auto unit = f.sublevel(1.0);
  if (!unit || hausdorff_distance(*unit, k) > 1e-9 * scale) {
    throw GeometryError("cone function does not reproduce K");
  }
  return f;
}

PiecewiseAffineConvex indicator(const Polytope& k, double t) {
  const int n = k.ambient_dim();
  std::vector<Halfspace> domain = k.halfspaces();
  return PiecewiseAffineConvex({{Vector::Zero(n), t}}, std::move(domain), n);
}

PiecewiseAffineConvex act_linear(const PiecewiseAffineConvex& u, const UnimodularMap& phi) {
  if (phi.dim() != u.dim()) throw InvalidArgument("dimension mismatch");
  const Matrix it = phi.inverse_transpose();
  std::vector<AffinePiece> pieces;
  for (const auto& p : u.pieces()) pieces.push_back({it * p.a, p.b});
  std::vector<Halfspace> domain;
  for (const auto& h : u.domain()) domain.push_back({it * h.normal, h.offset});
  return PiecewiseAffineConvex(std::move(pieces), std::move(domain), u.dim());
}

PiecewiseAffineConvex act_translate(const PiecewiseAffineConvex& u, const Vector& x0) {
  if (x0.size() != u.dim()) throw InvalidArgument("dimension mismatch");
  std::vector<AffinePiece> pieces;
  for (const auto& p : u.pieces()) pieces.push_back({p.a, p.b - p.a.dot(x0)});
  std::vector<Halfspace> domain;
  for (const auto& h : u.domain()) domain.push_back({h.normal, h.offset + h.normal.dot(x0)});
  return PiecewiseAffineConvex(std::move(pieces), std::move(domain), u.dim());
}

PiecewiseAffineConvex act_add_constant(const PiecewiseAffineConvex& u, double c) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : u.pieces()) pieces.push_back({p.a, p.b + c});
  return PiecewiseAffineConvex(std::move(pieces), u.domain(), u.dim());
}

PiecewiseAffineConvex reflect_arg(const PiecewiseAffineConvex& u) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : u.pieces()) pieces.push_back({-p.a, p.b});
  std::vector<Halfspace> domain;
  for (const auto& h : u.domain()) domain.push_back({-h.normal, h.offset});
  return PiecewiseAffineConvex(std::move(pieces), std::move(domain), u.dim());
}

namespace {

template <class F>
ConvexFunction lift(const ConvexFunction& f, F&& op) {
  if (const auto* g = std::get_if<PiecewiseAffineConvex>(&f)) return op(*g);
  const auto& m = std::get<LatticeMin>(f);
  return LatticeMin(op(m.first()), op(m.second()));
}

}  // namespace

ConvexFunction act_linear(const ConvexFunction& f, const UnimodularMap& phi) {
  return lift(f, [&](const PiecewiseAffineConvex& g) { return act_linear(g, phi); });
}

ConvexFunction act_translate(const ConvexFunction& f, const Vector& x0) {
  return lift(f, [&](const PiecewiseAffineConvex& g) { return act_translate(g, x0); });
}

ConvexFunction act_add_constant(const ConvexFunction& f, double c) {
  return lift(f, [&](const PiecewiseAffineConvex& g) { return act_add_constant(g, c); });
}

ConvexFunction reflect_arg(const ConvexFunction& f) {
  return lift(f, [](const PiecewiseAffineConvex& g) { return reflect_arg(g); });
}

std::vector<double> sublevel_hausdorff_profile(const ConvexFunction& u, const ConvexFunction& v,
                                               const std::vector<double>& levels) {
  std::vector<double> out;
  for (double t : levels) {
    const auto a = sublevel(u, t);
    const auto b = sublevel(v, t);
    if (!a && !b) {
      out.push_back(0.0);
    } else if (!a || !b) {
      out.push_back(kInfinity);
    } else {
      out.push_back(hausdorff_distance(*a, *b));
    }
  }
  return out;
}

}  // namespace funcbody
