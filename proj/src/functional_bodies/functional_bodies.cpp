#include "funcbody/errors.hpp"
#include "funcbody/functional_bodies.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace funcbody {

namespace {

Vector supports(const std::optional<Polytope>& s, const std::vector<Vector>& dirs) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dirs.size()));
  if (!s) return v;
  for (std::size_t i = 0; i < dirs.size(); ++i) v[i] = support(*s, dirs[i]);
  return v;
}

Vector scalar(double x) {
  Vector v(1);
  v << x;
  return v;
}

ScalarResult scalar_integral(const WeightFunction& zeta, const ConvexFunction& u,
                             const QuadratureConfig& cfg,
                             const std::function<double(const Polytope&)>& f) {
  const LevelIntegral r = integrate_levels(
      zeta, u, cfg, [&](const std::optional<Polytope>& s, double) {
        return scalar(s ? f(*s) : 0.0);
      });
  return {r.value[0], r.error_estimate};
}

}  // namespace

LyzMeasure lyz_measure(const WeightFunction& zeta, const ConvexFunction& u,
                       const QuadratureConfig& cfg) {
  const int n = dim(u);
  const std::vector<Vector> probes = direction_set(n, cfg.seed);
  std::map<double, DiscreteSphericalMeasure> sams;
  const LevelIntegral r =
      integrate_levels(zeta, u, cfg, [&](const std::optional<Polytope>& s, double level) {
        DiscreteSphericalMeasure m = s ? boundary_measure(*s) : DiscreteSphericalMeasure({}, n);
        Vector v(static_cast<Eigen::Index>(probes.size()));
        for (std::size_t i = 0; i < probes.size(); ++i) v[i] = cosine_transform(m, probes[i]);
        sams.emplace(level, std::move(m));
        return v;
      });
  std::vector<Atom> atoms;
  for (const auto& node : r.nodes) {
    for (const auto& a : sams.at(node.s).atoms()) {
      atoms.push_back({a.direction, a.weight * node.weight});
    }
  }
  return {DiscreteSphericalMeasure(std::move(atoms), n).symmetrized(), r.error_estimate};
}

BodyResult functional_projection_body(const WeightFunction& zeta, const ConvexFunction& u,
                                      const QuadratureConfig& cfg) {
  const std::vector<Vector> dirs = resolve_directions(cfg, dim(u));
  const LyzMeasure lyz = lyz_measure(zeta, u, cfg);
  std::vector<double> values;
  for (const auto& z : dirs) values.push_back(0.5 * cosine_transform(lyz.measure, z));
  return {SupportBody(dirs, std::move(values), "functional projection body"),
          0.5 * lyz.error_estimate};
}

ScalarResult projection_interpretation(const WeightFunction& zeta, const ConvexFunction& u,
                                       const Vector& z, const QuadratureConfig& cfg) {
  if (z.size() != dim(u)) throw InvalidArgument("dimension mismatch");
  const double len = z.norm();
  if (len == 0.0) return {0.0, 0.0};
  const std::vector<Vector> basis = orthogonal_complement(z);
  ScalarResult r = scalar_integral(zeta, u, cfg, [&](const Polytope& s) {
    const Polytope shadow = subspace_projection(s, basis);
    return shadow.full_dimensional() ? volume(shadow) : 0.0;
  });
  r.value *= len;
  r.error_estimate *= len;
  return r;
}

BodyResult level_set_body(const WeightFunction& zeta, const ConvexFunction& u,
                          const QuadratureConfig& cfg) {
  const std::vector<Vector> dirs = resolve_directions(cfg, dim(u));
  const LevelIntegral r = integrate_levels(
      zeta, u, cfg, [&](const std::optional<Polytope>& s, double) { return supports(s, dirs); });
  std::vector<double> values(r.value.data(), r.value.data() + r.value.size());
  return {SupportBody(dirs, std::move(values), "level set body"), r.error_estimate};
}

BodyResult difference_level_set_body(const WeightFunction& zeta, const ConvexFunction& u,
                                     const QuadratureConfig& cfg) {
  const std::vector<Vector> dirs = resolve_directions(cfg, dim(u));
  std::vector<Vector> negated;
  for (const auto& z : dirs) negated.push_back(-z);
  const LevelIntegral r =
      integrate_levels(zeta, u, cfg, [&](const std::optional<Polytope>& s, double) -> Vector {
        return supports(s, dirs) + supports(s, negated);
      });
  std::vector<double> values(r.value.data(), r.value.data() + r.value.size());
  return {SupportBody(dirs, std::move(values), "difference level set body"), r.error_estimate};
}

ScalarResult difference_width_interpretation(const WeightFunction& zeta, const ConvexFunction& u,
                                             const Vector& z, const QuadratureConfig& cfg) {
  if (z.size() != dim(u)) throw InvalidArgument("dimension mismatch");
  const double len = z.norm();
  if (len == 0.0) return {0.0, 0.0};
  const std::vector<Vector> line{z / len};
  ScalarResult r = scalar_integral(zeta, u, cfg, [&](const Polytope& s) {
    const Polytope shadow = subspace_projection(s, line);
    return shadow.affine_dim() == 1 ? affine_volume(shadow) : 0.0;
  });
  r.value *= len;
  r.error_estimate *= len;
  return r;
}

ScalarResult functional_volume(const WeightFunction& zeta, const ConvexFunction& u,
                               const QuadratureConfig& cfg) {
  return scalar_integral(zeta, u, cfg, [](const Polytope& s) { return volume(s); });
}

RadialIdentity radial_identity_check(const WeightFunction& zeta, const Polytope& k,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  const int n = k.ambient_dim();
  if (!k.full_dimensional()) throw InvalidArgument("radial identity needs 0 in the interior of K");
  for (const auto& h : k.halfspaces()) {
    if (h.offset <= 1e-10) throw InvalidArgument("radial identity needs 0 in the interior of K");
  }
  const double area = surface_area_measure(k).total_mass();

  // {zeta o l_K >= t} = g(t) K with g the generalized inverse; g is linear
  // between consecutive values of zeta.
  std::vector<double> cuts{0.0};
  for (double v : zeta.values()) {
    if (v > 0.0) cuts.push_back(v);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double top = zeta.top();
  const std::function<Vector(double)> boundary = [&](double t) {
    const double g = std::max(zeta.generalized_inverse(t), 0.0);
    if (g == 0.0) return scalar(0.0);
    return scalar(boundary_measure(scale(k, g)).total_mass());
  };
  RadialIdentity out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double tol = cfg.tolerance * (cuts[i + 1] - cuts[i]) / top;
    const IntervalIntegral part = integrate_interval(cuts[i], cuts[i + 1], boundary, cfg, tol);
    out.lhs += part.value[0];
    out.error_estimate += part.error_estimate;
  }
  out.rhs = area * (n - 1) * zeta.moment(n - 2);
  return out;
}

}  // namespace funcbody
