#pragma once

// Coercive piecewise-affine convex functions u = max_i (a_i . x + b_i) on a
// polyhedral domain {c_j . x <= d_j}, +inf outside. Sublevel sets are
// extracted by vertex enumeration; epigraphs are never built.

#include "funcbody/geometry_kernel.hpp"

#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace funcbody {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct AffinePiece {
  Vector a;
  double b = 0.0;
};

class PiecewiseAffineConvex {
 public:
  /// An empty piece list means the zero function on the domain. Throws
  /// InvalidArgument on mixed dimensions, an empty domain, or when the
  /// function is not coercive.
  PiecewiseAffineConvex(std::vector<AffinePiece> pieces, std::vector<Halfspace> domain,
                        int dim = -1);

  int dim() const { return dim_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::vector<Halfspace>& domain() const { return domain_; }

  /// +inf outside the domain (1e-12 slack).
  double evaluate(const Vector& x) const;

  /// {u <= t}, or nullopt when empty.
  std::optional<Polytope> sublevel(double t) const;

  /// Heights of the epigraph vertices, sorted and deduplicated: the levels
  /// at which the combinatorics of {u <= t} change.
  const std::vector<double>& event_levels() const { return events_; }

  /// min u, attained at the lowest epigraph vertex.
  double minimum() const { return events_.front(); }
  /// min u by bisection on the emptiness of {u <= t}.
  double minimum_by_bisection(double tol = 1e-9) const;

  /// Recession test: {z : a_i . z <= 0, c_j . z <= 0} = {0}.
  static bool is_coercive(const std::vector<AffinePiece>& pieces,
                          const std::vector<Halfspace>& domain, int dim);

 private:
  int dim_ = 0;
  std::vector<AffinePiece> pieces_;
  std::vector<Halfspace> domain_;
  std::vector<double> events_;
};

/// u ^ v, represented through its sublevel sets {u <= t} u {v <= t}. Only
/// meaningful (convex) for certified pairs.
class LatticeMin {
 public:
  LatticeMin(PiecewiseAffineConvex u, PiecewiseAffineConvex v);

  int dim() const { return u_.dim(); }
  const PiecewiseAffineConvex& first() const { return u_; }
  const PiecewiseAffineConvex& second() const { return v_; }

  double evaluate(const Vector& x) const;
  std::optional<Polytope> sublevel(double t) const;
  const std::vector<double>& event_levels() const { return events_; }
  double minimum() const { return events_.front(); }

 private:
  PiecewiseAffineConvex u_;
  PiecewiseAffineConvex v_;
  std::vector<double> events_;
};

using ConvexFunction = std::variant<PiecewiseAffineConvex, LatticeMin>;

int dim(const ConvexFunction& f);
double evaluate(const ConvexFunction& f, const Vector& x);
std::optional<Polytope> sublevel(const ConvexFunction& f, double t);
const std::vector<double>& event_levels(const ConvexFunction& f);
double minimum(const ConvexFunction& f);

struct LatticePair {
  PiecewiseAffineConvex u;
  PiecewiseAffineConvex v;
  bool certified = false;
  double max_defect = 0.0;            // worst distance of hull samples to the union
  std::vector<double> probe_levels;
};

/// Pointwise max: union of pieces, intersection of domains.
PiecewiseAffineConvex pointwise_max(const PiecewiseAffineConvex& u, const PiecewiseAffineConvex& v);

/// Pairs u and v with an empirical certificate that u ^ v is convex: on every
/// probe level the hull of {u <= t} u {v <= t} stays within 1e-8 of the union.
LatticePair pointwise_min_certified(const PiecewiseAffineConvex& u,
                                    const PiecewiseAffineConvex& v);

/// u ^ v of a certified pair. Throws InvalidArgument when uncertified.
LatticeMin lattice_min(const LatticePair& pair);

/// Gauge-type function with {l_K <= t} = tK. Throws InvalidArgument if 0 is not in K.
PiecewiseAffineConvex cone_function(const Polytope& k);
/// t on K, +inf outside.
PiecewiseAffineConvex indicator(const Polytope& k, double t = 0.0);

/// u o phi^{-1}.
PiecewiseAffineConvex act_linear(const PiecewiseAffineConvex& u, const UnimodularMap& phi);
/// x -> u(x - x0).
PiecewiseAffineConvex act_translate(const PiecewiseAffineConvex& u, const Vector& x0);
PiecewiseAffineConvex act_add_constant(const PiecewiseAffineConvex& u, double c);
/// x -> u(-x).
PiecewiseAffineConvex reflect_arg(const PiecewiseAffineConvex& u);

ConvexFunction act_linear(const ConvexFunction& f, const UnimodularMap& phi);
ConvexFunction act_translate(const ConvexFunction& f, const Vector& x0);
ConvexFunction act_add_constant(const ConvexFunction& f, double c);
ConvexFunction reflect_arg(const ConvexFunction& f);

/// Hausdorff distance of sublevel sets per level; +inf when exactly one is
/// empty, 0 when both are.
std::vector<double> sublevel_hausdorff_profile(const ConvexFunction& u, const ConvexFunction& v,
                                               const std::vector<double>& levels);

}  // namespace funcbody
