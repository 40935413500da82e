#pragma once

// Level-set integrals of zeta o u: the LYZ measure, the functional projection
// body, the level set body and its difference body, functional volume, and
// the radial surface-area identity.
//
// Every integral over t in (0, zeta(t0)] is computed in the level variable s
// through t = zeta(s): int F({zeta o u >= t}) dt = int F({u <= s}) (-zeta'(s)) ds
// over s in [max(t0, min u), t_m], split at the breakpoints of zeta and at
// the event levels of u, with adaptive Gauss-Legendre rules on each cell.

#include "funcbody/convex_functions.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "funcbody/weight_functions.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace funcbody {

struct QuadratureConfig {
  int nodes = 8;
  double tolerance = 1e-7;
  int max_depth = 12;
  /// Directions for support-valued results; empty means direction_set(n, seed).
  std::vector<Vector> directions;
  std::uint64_t seed = 0x5EED;

  /// Throws InvalidArgument for nodes < 2, tolerance <= 0 or max_depth < 0.
  void validate() const;
};

std::vector<Vector> resolve_directions(const QuadratureConfig& cfg, int n);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
GaussRule gauss_legendre(int n);

struct LevelNode {
  double s = 0.0;
  double weight = 0.0;  // Gauss weight times -zeta'(s)
};

struct LevelIntegral {
  Vector value;
  double error_estimate = 0.0;
  std::vector<LevelNode> nodes;  // nodes of the accepted rules, in order
};

using LevelIntegrand = std::function<Vector(const std::optional<Polytope>& sublevel, double s)>;

/// int F({u <= s}) (-zeta'(s)) ds. Throws VanishingFunctionError when
/// zeta o u == 0 and QuadratureError when a cell fails to converge within
/// max_depth bisections.
LevelIntegral integrate_levels(const WeightFunction& zeta, const ConvexFunction& u,
                               const QuadratureConfig& cfg, const LevelIntegrand& integrand);

/// Adaptive Gauss-Legendre on [a, b] with absolute tolerance `tol`.
struct IntervalIntegral {
  Vector value;
  double error_estimate = 0.0;
};
IntervalIntegral integrate_interval(double a, double b, const std::function<Vector(double)>& f,
                                    const QuadratureConfig& cfg, double tol);

struct LyzMeasure {
  DiscreteSphericalMeasure measure;
  double error_estimate = 0.0;
};

struct BodyResult {
  SupportBody body;
  double error_estimate = 0.0;
};

struct ScalarResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct RadialIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double error_estimate = 0.0;
};

/// Even measure with int b dS = int_0^inf int b dS({zeta o u >= t}) dt,
/// symmetrized as (Y(zeta o u) + Y(zeta o u reflected)) / 2.
LyzMeasure lyz_measure(const WeightFunction& zeta, const ConvexFunction& u,
                       const QuadratureConfig& cfg = {});

/// h(z) = cosine_transform(S, z) / 2 on the configured directions.
BodyResult functional_projection_body(const WeightFunction& zeta, const ConvexFunction& u,
                                      const QuadratureConfig& cfg = {});

/// int_0^inf V_{n-1}(proj_{z^perp} {zeta o u >= t}) dt.
ScalarResult projection_interpretation(const WeightFunction& zeta, const ConvexFunction& u,
                                       const Vector& z, const QuadratureConfig& cfg = {});

/// h(z) = int_0^inf h({zeta o u >= t}, z) dt.
BodyResult level_set_body(const WeightFunction& zeta, const ConvexFunction& u,
                          const QuadratureConfig& cfg = {});

/// h(z) = h(<zeta o u>, z) + h(<zeta o u>, -z).
BodyResult difference_level_set_body(const WeightFunction& zeta, const ConvexFunction& u,
                                     const QuadratureConfig& cfg = {});

/// int_0^inf V_1(proj_{R z} {zeta o u >= t}) dt for unit z.
ScalarResult difference_width_interpretation(const WeightFunction& zeta, const ConvexFunction& u,
                                             const Vector& z, const QuadratureConfig& cfg = {});

/// int zeta(u(x)) dx = int_0^inf V_n({zeta o u >= t}) dt.
ScalarResult functional_volume(const WeightFunction& zeta, const ConvexFunction& u,
                               const QuadratureConfig& cfg = {});

/// lhs: int_0^inf H^{n-1}(boundary of {zeta o l_K >= t}) dt by quadrature in t;
/// rhs: S(K, sphere) (n-1) int_0^inf s^{n-2} zeta(s) ds. Needs 0 in int K.
RadialIdentity radial_identity_check(const WeightFunction& zeta, const Polytope& k,
                                     const QuadratureConfig& cfg = {});

}  // namespace funcbody
