#pragma once

// Black-box checks of the valuation, equivariance, monotonicity and growth
// laws for body-valued operators on convex functions.

#include "funcbody/convex_functions.hpp"
#include "funcbody/functional_bodies.hpp"
#include "funcbody/geometry_kernel.hpp"
#include "funcbody/weight_functions.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace funcbody {

enum class Variance { Contravariant, Covariant, Measure };

/// Which classical body an operator reduces to on indicators and cones.
enum class ReferenceKind {
  ProjectionBody,  // h(Pi K, z)
  DifferenceBody,  // h(D K, z)
  Body,            // h(K, z)
  Cosine,          // cosine_transform(S(K), z)
};

/// Support values of Z(u) on the given directions.
using Evaluator =
    std::function<std::vector<double>(const ConvexFunction& u, const std::vector<Vector>& dirs)>;

struct OperatorHandle {
  std::string name;
  Variance variance = Variance::Contravariant;
  bool translation_invariant = true;
  ReferenceKind reference = ReferenceKind::ProjectionBody;
  WeightFunction zeta;
  Evaluator evaluate;

  double reference_support(const Polytope& k, const Vector& z) const;
};

/// The built-in operators. A vanishing zeta o u evaluates to the zero body.
OperatorHandle projection_operator(const WeightFunction& zeta, const QuadratureConfig& cfg = {});
OperatorHandle level_set_operator(const WeightFunction& zeta, const QuadratureConfig& cfg = {});
OperatorHandle difference_operator(const WeightFunction& zeta, const QuadratureConfig& cfg = {});
/// z -> int |y . z| dS<zeta o u>(y), the LYZ measure seen through cosine test functions.
OperatorHandle lyz_cosine_operator(const WeightFunction& zeta, const QuadratureConfig& cfg = {});

struct Report {
  std::string check;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<double> residuals;
  std::map<std::string, double> witness;
  std::string note;
};

/// |h(Z(u v v)) + h(Z(u ^ v)) - h(Z(u)) - h(Z(v))| per direction. Throws
/// InvalidArgument for an uncertified pair.
Report check_valuation(const OperatorHandle& z, const LatticePair& pair,
                       const std::vector<Vector>& dirs, double tol);

/// Contravariant: h(Z(u o phi^-1), z) = h(Z(u), phi^-1 z); covariant:
/// h(Z(u o phi^-1), z) = h(Z(u), phi^t z). The measure variant follows the
/// contravariant law.
Report check_equivariance(const OperatorHandle& z, const ConvexFunction& u,
                          const std::vector<UnimodularMap>& maps, const std::vector<Vector>& dirs,
                          double tol);

Report check_translation_invariance(const OperatorHandle& z, const ConvexFunction& u,
                                    const std::vector<Vector>& shifts,
                                    const std::vector<Vector>& dirs, double tol);

/// True when {u <= t} is contained in {v <= t} on the probe levels of both,
/// i.e. u >= v.
bool dominates(const PiecewiseAffineConvex& u, const PiecewiseAffineConvex& v);

/// For pairs (u, v) with u >= v: residual max(0, h(Z(u), z) - h(Z(v), z)).
/// Throws InvalidArgument when a pair is not ordered.
Report check_monotone(const OperatorHandle& z,
                      const std::vector<std::pair<PiecewiseAffineConvex, PiecewiseAffineConvex>>& pairs,
                      const std::vector<Vector>& dirs, double tol);

struct GrowthProfile {
  std::vector<double> t;
  std::vector<double> psi;
  Vector direction;
  Vector second_direction;
  double cross_deviation = 0.0;  // max relative deviation between the two directions
};

/// psi(t) = h(Z(l_K + t), z*) / h(reference body, z*). Throws GeometryError
/// when the reference support is below 1e-6.
GrowthProfile extract_cone_growth(const OperatorHandle& z, const Polytope& k,
                                  const std::vector<double>& grid);

/// Central differences of order n-1 (contravariant, n in {3, 4}) or 1
/// (covariant) against zeta on a uniform grid. Points closer than `margin`
/// (default: the stencil radius) to a breakpoint of zeta are skipped and
/// counted in the witness.
Report check_growth_derivative_law(const GrowthProfile& profile, const WeightFunction& zeta, int n,
                                   Variance variance, double tol, double margin = -1.0);

/// psi nonincreasing on the grid and |psi(t)| <= tol for t >= t_m.
Report check_growth_limit(const GrowthProfile& profile, const WeightFunction& zeta, double tol);

/// h(Z(I_P + t), z) = zeta(t) h(reference body of P, z) per level and direction.
Report check_indicator_law(const OperatorHandle& z, const Polytope& p,
                           const std::vector<double>& levels, const std::vector<Vector>& dirs,
                           double tol);

/// Least squares fit of h(Z(l_{T_s} + t), +-e1), s in {1, 2, 3}, to
/// psi1 K + psi2 (-K) + psi3 M K + psi4 m(K); the residual combines the fit
/// error, |psi1 - psi2| and |psi3|, |psi4|.
Report check_covariant_decomposition(const OperatorHandle& z, int n,
                                     const std::vector<double>& grid, double tol);

// Constructed families ------------------------------------------------------

/// conv{0, (e1 + e2)/2, e2, e3} and conv{0, e2, e3} in R^3.
Polytope polytope_p();
Polytope polytope_q();

/// u_t with epi u_t = epi l_P n {x1 <= t/2}, paired with
/// l_{P,t} = l_P o tau^-1 + t, tau(x) = x + (t/2)(e1 + e2).
LatticePair truncated_cone_pair(double t);

/// 25 certified pairs in R^3: truncated cone pairs, overlapping box cones,
/// hyperplane splits, indicator pairs with convex union and dominated pairs.
std::vector<LatticePair> lattice_families();

/// Special linear maps built from random shears and rotations.
std::vector<UnimodularMap> random_special_linear_maps(int n, int count, std::uint64_t seed);

}  // namespace funcbody
