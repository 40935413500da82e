#include "funcbody/valuation_lab.hpp"

#include "funcbody/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace funcbody {

namespace {

using Body = std::function<BodyResult(const WeightFunction&, const ConvexFunction&,
                                      const QuadratureConfig&)>;

Evaluator body_evaluator(WeightFunction zeta, QuadratureConfig cfg, Body body, double factor) {
  return [zeta = std::move(zeta), cfg = std::move(cfg), body = std::move(body), factor](
             const ConvexFunction& u, const std::vector<Vector>& dirs) {
    QuadratureConfig c = cfg;
    c.directions = dirs;
    try {
      std::vector<double> v = body(zeta, u, c).body.values();
      for (auto& x : v) x *= factor;
      return v;
    } catch (const VanishingFunctionError&) {
      return std::vector<double>(dirs.size(), 0.0);
    }
  };
}

Report finish(Report r) {
  r.max_residual = 0.0;
  for (double x : r.residuals) r.max_residual = std::max(r.max_residual, x);
  r.pass = r.max_residual <= r.tolerance;
  return r;
}

std::vector<double> merge_levels(const PiecewiseAffineConvex& u, const PiecewiseAffineConvex& v) {
  std::vector<double> ev = u.event_levels();
  ev.insert(ev.end(), v.event_levels().begin(), v.event_levels().end());
  std::sort(ev.begin(), ev.end());
  const double lo = ev.front() - 1.0, hi = ev.back() + (ev.back() - ev.front()) + 1.0;
  std::vector<double> levels = ev;
  for (int k = 0; k <= 16; ++k) levels.push_back(lo + (hi - lo) * k / 16.0);
  std::sort(levels.begin(), levels.end());
  return levels;
}

Polytope clip(const Polytope& k, const Vector& w) {
  std::vector<Halfspace> domain = k.halfspaces();
  domain.push_back({-w, 0.0});
  const PiecewiseAffineConvex f({}, std::move(domain), k.ambient_dim());
  return *f.sublevel(0.0);
}

Polytope box(const Vector& lo, const Vector& hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1) ? hi[i] : lo[i];
    pts.push_back(v);
  }
  return convex_hull(pts);
}

Vector v3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

}  // namespace

double OperatorHandle::reference_support(const Polytope& k, const Vector& z) const {
  const bool has_sam = k.affine_dim() >= k.ambient_dim() - 1;
  switch (reference) {
    case ReferenceKind::ProjectionBody:
      return has_sam ? projection_body_support(k, z) : 0.0;
    case ReferenceKind::DifferenceBody:
      return support(k, z) + support(k, -z);
    case ReferenceKind::Body:
      return support(k, z);
    case ReferenceKind::Cosine:
      return has_sam ? cosine_transform(surface_area_measure(k), z) : 0.0;
  }
  return 0.0;
}

OperatorHandle projection_operator(const WeightFunction& zeta, const QuadratureConfig& cfg) {
  return {"projection body", Variance::Contravariant, true, ReferenceKind::ProjectionBody, zeta,
          body_evaluator(zeta, cfg, functional_projection_body, 1.0)};
}

OperatorHandle level_set_operator(const WeightFunction& zeta, const QuadratureConfig& cfg) {
  return {"level set body", Variance::Covariant, false, ReferenceKind::Body, zeta,
          body_evaluator(zeta, cfg, level_set_body, 1.0)};
}

OperatorHandle difference_operator(const WeightFunction& zeta, const QuadratureConfig& cfg) {
  return {"difference body", Variance::Covariant, true, ReferenceKind::DifferenceBody, zeta,
          body_evaluator(zeta, cfg, difference_level_set_body, 1.0)};
}

OperatorHandle lyz_cosine_operator(const WeightFunction& zeta, const QuadratureConfig& cfg) {
  return {"LYZ measure cosine transform", Variance::Measure, true, ReferenceKind::Cosine, zeta,
          body_evaluator(zeta, cfg, functional_projection_body, 2.0)};
}

Report check_valuation(const OperatorHandle& z, const LatticePair& pair,
                       const std::vector<Vector>& dirs, double tol) {
  if (!pair.certified) throw InvalidArgument("lattice pair is not certified");
  const auto hu = z.evaluate(pair.u, dirs);
  const auto hv = z.evaluate(pair.v, dirs);
  const auto hmax = z.evaluate(pointwise_max(pair.u, pair.v), dirs);
  const auto hmin = z.evaluate(lattice_min(pair), dirs);
  Report r{"valuation/" + z.name, 0.0, tol, false, {}, {}, {}};
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    r.residuals.push_back(std::abs(hmax[i] + hmin[i] - hu[i] - hv[i]));
  }
  r.witness["certificate_defect"] = pair.max_defect;
  return finish(std::move(r));
}

Report check_equivariance(const OperatorHandle& z, const ConvexFunction& u,
                          const std::vector<UnimodularMap>& maps, const std::vector<Vector>& dirs,
                          double tol) {
  Report r{"equivariance/" + z.name, 0.0, tol, false, {}, {}, {}};
  for (std::size_t m = 0; m < maps.size(); ++m) {
    const UnimodularMap& phi = maps[m];
    std::vector<Vector> pulled;
    for (const auto& d : dirs) {
      pulled.push_back(z.variance == Variance::Covariant ? Vector(phi.matrix().transpose() * d)
                                                         : Vector(phi.inverse() * d));
    }
    const auto lhs = z.evaluate(act_linear(u, phi), dirs);
    const auto rhs = z.evaluate(u, pulled);
    for (std::size_t i = 0; i < dirs.size(); ++i) r.residuals.push_back(std::abs(lhs[i] - rhs[i]));
  }
  r.witness["maps"] = static_cast<double>(maps.size());
  return finish(std::move(r));
}

Report check_translation_invariance(const OperatorHandle& z, const ConvexFunction& u,
                                    const std::vector<Vector>& shifts,
                                    const std::vector<Vector>& dirs, double tol) {
  Report r{"translation/" + z.name, 0.0, tol, false, {}, {}, {}};
  const auto base = z.evaluate(u, dirs);
  for (const auto& x : shifts) {
    const auto moved = z.evaluate(act_translate(u, x), dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      r.residuals.push_back(std::abs(moved[i] - base[i]));
    }
  }
  r.witness["shifts"] = static_cast<double>(shifts.size());
  return finish(std::move(r));
}

bool dominates(const PiecewiseAffineConvex& u, const PiecewiseAffineConvex& v) {
  if (u.dim() != v.dim()) return false;
  for (double t : merge_levels(u, v)) {
    const auto a = u.sublevel(t);
    if (!a) continue;
    const auto b = v.sublevel(t);
    if (!b) return false;
    for (const auto& x : a->vertices()) {
      if (!b->contains(x, 1e-9)) return false;
    }
  }
  return true;
}

Report check_monotone(const OperatorHandle& z,
                      const std::vector<std::pair<PiecewiseAffineConvex, PiecewiseAffineConvex>>& pairs,
                      const std::vector<Vector>& dirs, double tol) {
  Report r{"monotone/" + z.name, 0.0, tol, false, {}, {}, {}};
  for (const auto& [upper, lower] : pairs) {
    if (!dominates(upper, lower)) throw InvalidArgument("pair is not ordered");
    const auto hu = z.evaluate(upper, dirs);
    const auto hl = z.evaluate(lower, dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) r.residuals.push_back(std::max(0.0, hu[i] - hl[i]));
  }
  return finish(std::move(r));
}

GrowthProfile extract_cone_growth(const OperatorHandle& z, const Polytope& k,
                                  const std::vector<double>& grid) {
  const int n = k.ambient_dim();
  std::vector<Vector> candidates = direction_set(n);
  std::vector<double> ref;
  for (const auto& d : candidates) ref.push_back(z.reference_support(k, d));
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (ref[i] > ref[best]) best = i;
  }
  if (ref[best] <= 1e-6) throw GeometryError("reference support too small");
  std::size_t second = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i == best || ref[i] <= 1e-6) continue;
    if (std::abs(std::abs(candidates[i].dot(candidates[best])) - 1.0) < 1e-9) continue;
    if (second == candidates.size() || ref[i] > ref[second]) second = i;
  }
  if (second == candidates.size()) second = best;

  GrowthProfile g;
  g.direction = candidates[best];
  g.second_direction = candidates[second];
  const PiecewiseAffineConvex cone = cone_function(k);
  for (double t : grid) {
    const auto h = z.evaluate(act_add_constant(cone, t), {g.direction, g.second_direction});
    const double p1 = h[0] / ref[best];
    const double p2 = h[1] / ref[second];
    const double scale = std::max(std::abs(p1), std::abs(p2));
    if (scale > 1e-12) g.cross_deviation = std::max(g.cross_deviation, std::abs(p1 - p2) / scale);
    g.t.push_back(t);
    g.psi.push_back(p1);
  }
  return g;
}

Report check_growth_derivative_law(const GrowthProfile& profile, const WeightFunction& zeta, int n,
                                   Variance variance, double tol, double margin) {
  const auto& t = profile.t;
  const auto& psi = profile.psi;
  if (t.size() < 5) throw InvalidArgument("growth grid too short");
  const double h = t[1] - t[0];
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (std::abs(t[i] - t[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw InvalidArgument("growth grid must be uniform");
    }
  }
  const bool contra = variance != Variance::Covariant;
  if (contra && n != 3 && n != 4) throw InvalidArgument("derivative law supports n = 3 and 4 only");
  const int radius = (contra && n == 4) ? 2 : 1;
  if (margin < 0.0) margin = radius * h;

  Report r{"growth-derivative", 0.0, tol, false, {}, {}, {}};
  int skipped = 0;
  for (std::size_t i = radius; i + radius < t.size(); ++i) {
    bool near = false;
    for (double b : zeta.breakpoints()) {
      const double lo = t[i] - std::max(margin, radius * h);
      const double hi = t[i] + std::max(margin, radius * h);
      if (b > lo + 1e-12 && b < hi - 1e-12) near = true;
    }
    if (near) {
      ++skipped;
      continue;
    }
    double estimate = 0.0;
    if (!contra) {
      estimate = -(psi[i + 1] - psi[i - 1]) / (2.0 * h);
    } else if (n == 3) {
      estimate = 0.5 * (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
    } else {
      const double third =
          (psi[i + 2] - 2.0 * psi[i + 1] + 2.0 * psi[i - 1] - psi[i - 2]) / (2.0 * h * h * h);
      estimate = -third / 6.0;
    }
    r.residuals.push_back(std::abs(estimate - zeta.eval(t[i])));
  }
  r.witness["skipped"] = skipped;
  r.witness["step"] = h;
  if (skipped > 0) r.note = "grid points near breakpoints skipped";
  return finish(std::move(r));
}

Report check_growth_limit(const GrowthProfile& profile, const WeightFunction& zeta, double tol) {
  Report r{"growth-limit", 0.0, tol, false, {}, {}, {}};
  for (std::size_t i = 0; i + 1 < profile.psi.size(); ++i) {
    r.residuals.push_back(std::max(0.0, profile.psi[i + 1] - profile.psi[i]));
  }
  for (std::size_t i = 0; i < profile.psi.size(); ++i) {
    if (profile.t[i] >= zeta.support_end()) r.residuals.push_back(std::abs(profile.psi[i]));
  }
  return finish(std::move(r));
}

Report check_indicator_law(const OperatorHandle& z, const Polytope& p,
                           const std::vector<double>& levels, const std::vector<Vector>& dirs,
                           double tol) {
  Report r{"indicator/" + z.name, 0.0, tol, false, {}, {}, {}};
  for (double t : levels) {
    const auto h = z.evaluate(indicator(p, t), dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      r.residuals.push_back(std::abs(h[i] - z.zeta.eval(t) * z.reference_support(p, dirs[i])));
    }
  }
  return finish(std::move(r));
}

Report check_covariant_decomposition(const OperatorHandle& z, int n,
                                     const std::vector<double>& grid, double tol) {
  double factorial = 1.0;
  for (int k = 2; k <= n + 1; ++k) factorial *= k;
  const Vector e1 = unit_vector(n, 0);
  Report r{"covariant-decomposition/" + z.name, 0.0, tol, false, {}, {}, {}};
  double worst_split = 0.0, worst_moment = 0.0;
  for (double t : grid) {
    Matrix a = Matrix::Zero(6, 4);
    Vector b(6);
    for (int s = 1; s <= 3; ++s) {
      const PiecewiseAffineConvex u = act_add_constant(cone_function(stretched_simplex(n, s)), t);
      const auto h = z.evaluate(u, {e1, Vector(-e1)});
      const double c = s * s / factorial;
      const int row = 2 * (s - 1);
      a.row(row) << s, 0.0, c, c;
      a.row(row + 1) << 0.0, s, c, -c;
      b[row] = h[0];
      b[row + 1] = h[1];
    }
    const Vector psi = a.colPivHouseholderQr().solve(b);
    const double fit = (a * psi - b).cwiseAbs().maxCoeff();
    const double split = std::abs(psi[0] - psi[1]);
    const double moment = std::max(std::abs(psi[2]), std::abs(psi[3]));
    worst_split = std::max(worst_split, split);
    worst_moment = std::max(worst_moment, moment);
    r.residuals.push_back(std::max({fit, split, moment}));
  }
  r.witness["max_psi1_minus_psi2"] = worst_split;
  r.witness["max_moment_coefficient"] = worst_moment;
  return finish(std::move(r));
}

Polytope polytope_p() {
  return convex_hull({v3(0, 0, 0), v3(0.5, 0.5, 0), v3(0, 1, 0), v3(0, 0, 1)});
}

Polytope polytope_q() { return convex_hull({v3(0, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}); }

LatticePair truncated_cone_pair(double t) {
  const PiecewiseAffineConvex lp = cone_function(polytope_p());
  std::vector<Halfspace> domain = lp.domain();
  domain.push_back({v3(1, 0, 0), t / 2});
  const PiecewiseAffineConvex ut(lp.pieces(), std::move(domain), 3);
  const PiecewiseAffineConvex shifted = act_add_constant(act_translate(lp, v3(t / 2, t / 2, 0)), t);
  return pointwise_min_certified(ut, shifted);
}

std::vector<LatticePair> lattice_families() {
  std::vector<LatticePair> out;
  for (double t : {0.1, 0.25, 0.4, 0.6, 0.8}) out.push_back(truncated_cone_pair(t));

  const double boxes[5][4] = {{1.0, 0.5, 0.5, 1.0},
                              {1.0, 0.2, 0.3, 1.5},
                              {0.5, 1.0, 1.0, 0.5},
                              {2.0, 0.5, 0.25, 1.0},
                              {0.75, 0.75, 1.5, 0.25}};
  for (const auto& b : boxes) {
    const Polytope k1 = box(v3(-b[0], -1, -0.5), v3(b[1], 1, 2));
    const Polytope k2 = box(v3(-b[2], -1, -0.5), v3(b[3], 1, 2));
    out.push_back(pointwise_min_certified(cone_function(k1), cone_function(k2)));
  }

  const std::pair<Polytope, Vector> splits[5] = {
      {centered_cube(3), v3(1, 0, 0)},
      {centered_cube(3), v3(1, 1, 0).normalized()},
      {cross_polytope(3), v3(1, 0, 0)},
      {cross_polytope(3), v3(1, 2, 3).normalized()},
      {centered_cube(3), v3(1, -2, 1).normalized()}};
  for (const auto& [k, w] : splits) {
    out.push_back(pointwise_min_certified(cone_function(clip(k, w)), cone_function(clip(k, -w))));
  }

  const double shifts[5][2] = {{0.0, 0.0}, {0.0, 0.3}, {0.2, 0.1}, {0.5, 0.0}, {0.1, 0.6}};
  const Polytope a = box(v3(-1, -1, -1), v3(0.5, 1, 1));
  const Polytope b = box(v3(-0.5, -1, -1), v3(1, 1, 1));
  for (const auto& s : shifts) out.push_back(pointwise_min_certified(indicator(a, s[0]), indicator(b, s[1])));

  const Polytope cube = centered_cube(3);
  const Polytope simplex = standard_simplex(3);
  const PiecewiseAffineConvex lc = cone_function(cube);
  out.push_back(pointwise_min_certified(act_add_constant(lc, 0.1), lc));
  out.push_back(pointwise_min_certified(act_add_constant(lc, 0.3), lc));
  out.push_back(pointwise_min_certified(cone_function(scale(cube, 0.5)), lc));
  out.push_back(pointwise_min_certified(indicator(cube, 1.0), lc));
  out.push_back(pointwise_min_certified(act_add_constant(cone_function(simplex), 0.2),
                                        cone_function(scale(simplex, 2.0))));
  return out;
}

std::vector<UnimodularMap> random_special_linear_maps(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> axis(0, n - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<UnimodularMap> out;
  for (int k = 0; k < count; ++k) {
    Matrix m = Matrix::Identity(n, n);
    for (int step = 0; step < 2; ++step) {
      int i = axis(rng), j = axis(rng);
      while (j == i) j = axis(rng);
      Matrix shear = Matrix::Identity(n, n);
      shear(i, j) = coef(rng);
      int p = axis(rng), q = axis(rng);
      while (q == p) q = axis(rng);
      const double a = angle(rng);
      Matrix rot = Matrix::Identity(n, n);
      rot(p, p) = std::cos(a);
      rot(q, q) = std::cos(a);
      rot(p, q) = -std::sin(a);
      rot(q, p) = std::sin(a);
      m = rot * shear * m;
    }
    out.emplace_back(m, UnimodularMap::Kind::SpecialLinear);
  }
  return out;
}

}  // namespace funcbody
