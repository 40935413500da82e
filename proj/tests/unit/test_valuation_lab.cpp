#include "funcbody/errors.hpp"
#include "funcbody/valuation_lab.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace funcbody {
namespace {

using testing::Gen;
using testing::vec;

std::vector<Vector> few_directions() {
  const std::vector<Vector> all = direction_set(3);
  return {all.begin(), all.begin() + 20};
}

std::vector<double> uniform_grid(double lo, double hi, double h) {
  std::vector<double> g;
  for (int i = 0; lo + i * h <= hi + 1e-12; ++i) g.push_back(lo + i * h);
  return g;
}

TEST(Valuation, IdenticalFunctionsGiveZeroResidual) {
  const WeightFunction zeta = WeightFunction::tent();
  const PiecewiseAffineConvex u = cone_function(standard_simplex(3));
  const LatticePair pair = pointwise_min_certified(u, u);
  ASSERT_TRUE(pair.certified);
  const Report r = check_valuation(projection_operator(zeta), pair, few_directions(), 1e-12);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_residual, 1e-15);
}

TEST(Valuation, TruncatedConePairPassesForAllOperators) {
  const WeightFunction zeta = WeightFunction::tent();
  const LatticePair pair = truncated_cone_pair(0.5);
  for (const auto& op : {projection_operator(zeta), level_set_operator(zeta),
                         difference_operator(zeta), lyz_cosine_operator(zeta)}) {
    const Report r = check_valuation(op, pair, few_directions(), 4e-7);
    EXPECT_TRUE(r.pass) << op.name << " residual " << r.max_residual;
  }
}

TEST(Valuation, UncertifiedPairIsRejected) {
  LatticePair pair{cone_function(centered_cube(3)), cone_function(centered_cube(3)), false, 1.0, {}};
  EXPECT_THROW(check_valuation(projection_operator(WeightFunction::tent()), pair, few_directions(),
                               1e-7),
               InvalidArgument);
}

TEST(Valuation, NonValuationIsDetected) {
  const WeightFunction zeta = WeightFunction::tent();
  OperatorHandle squared = level_set_operator(zeta);
  const Evaluator base = squared.evaluate;
  squared.name = "squared level set body";
  squared.evaluate = [base](const ConvexFunction& u, const std::vector<Vector>& dirs) {
    std::vector<double> v = base(u, dirs);
    for (auto& x : v) x *= x;
    return v;
  };
  double worst = 0.0;
  for (const auto& pair : lattice_families()) {
    worst = std::max(worst, check_valuation(squared, pair, few_directions(), 1e-7).max_residual);
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(Equivariance, IdentityMapGivesZeroResidual) {
  const WeightFunction zeta = WeightFunction::tent();
  const PiecewiseAffineConvex u = cone_function(polytope_p());
  const Report r = check_equivariance(projection_operator(zeta), u, {UnimodularMap::identity(3)},
                                      few_directions(), 1e-14);
  EXPECT_TRUE(r.pass);
}

TEST(Equivariance, ShearOnTheSimplexCone) {
  const WeightFunction zeta = WeightFunction::tent();
  Matrix m = Matrix::Identity(3, 3);
  m(1, 0) = 1.0;
  const UnimodularMap shear(m, UnimodularMap::Kind::SpecialLinear);
  const PiecewiseAffineConvex u = cone_function(standard_simplex(3));
  for (const auto& op : {projection_operator(zeta), level_set_operator(zeta),
                         difference_operator(zeta)}) {
    EXPECT_TRUE(check_equivariance(op, u, {shear}, few_directions(), 2e-7).pass) << op.name;
  }
  // Direct oracle: sublevel sets of u o shear^-1 are shear(s T).
  const std::vector<Vector> dirs = few_directions();
  const auto h = level_set_operator(zeta).evaluate(act_linear(u, shear), dirs);
  const Polytope image = linear_image(standard_simplex(3), shear);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    EXPECT_NEAR(h[i], 0.5 * std::max(0.0, support(image, dirs[i])), 1e-12);
  }
}

TEST(Equivariance, WrongLawIsDetected) {
  const WeightFunction zeta = WeightFunction::tent();
  OperatorHandle mislabeled = projection_operator(zeta);
  mislabeled.variance = Variance::Covariant;
  const auto maps = random_special_linear_maps(3, 3, 5);
  EXPECT_FALSE(check_equivariance(mislabeled, cone_function(polytope_p()), maps,
                                  few_directions(), 1e-7)
                   .pass);
}

TEST(Equivariance, RandomMapsAreSpecialLinear) {
  for (const auto& m : random_special_linear_maps(4, 10, 3)) {
    EXPECT_NEAR(m.matrix().determinant(), 1.0, 1e-12);
    EXPECT_EQ(m.kind(), UnimodularMap::Kind::SpecialLinear);
  }
}

TEST(TranslationInvariance, ProjectionAndDifferenceButNotLevelSetBody) {
  Gen g(61);
  const WeightFunction zeta = WeightFunction::tent();
  const PiecewiseAffineConvex u = cone_function(g.body(3));
  const std::vector<Vector> shifts{g.point(3), g.point(3)};
  EXPECT_TRUE(check_translation_invariance(projection_operator(zeta), u, shifts, few_directions(), 2e-7).pass);
  EXPECT_TRUE(check_translation_invariance(difference_operator(zeta), u, shifts, few_directions(), 2e-7).pass);
  EXPECT_FALSE(check_translation_invariance(level_set_operator(zeta), u, shifts, few_directions(), 2e-7).pass);
  EXPECT_FALSE(level_set_operator(zeta).translation_invariant);
}

TEST(Monotone, DecreasingWeightGivesDecreasingOperators) {
  const WeightFunction zeta = WeightFunction::tent();
  const PiecewiseAffineConvex l = cone_function(centered_cube(3));
  const std::vector<std::pair<PiecewiseAffineConvex, PiecewiseAffineConvex>> pairs{
      {act_add_constant(l, 1.0), l},
      {act_add_constant(l, 0.3), l},
      {cone_function(scale(centered_cube(3), 0.5)), l}};
  for (const auto& [a, b] : pairs) EXPECT_TRUE(dominates(a, b));
  EXPECT_FALSE(dominates(l, act_add_constant(l, 0.3)));
  for (const auto& op : {projection_operator(zeta), difference_operator(zeta)}) {
    EXPECT_TRUE(check_monotone(op, pairs, few_directions(), 1e-9).pass) << op.name;
  }
  EXPECT_THROW(check_monotone(projection_operator(zeta), {{l, act_add_constant(l, 0.3)}},
                              few_directions(), 1e-9),
               InvalidArgument);
}

TEST(Growth, ProjectionProfileHasTheTentClosedForm) {
  const WeightFunction zeta = WeightFunction::tent();
  const std::vector<double> grid = uniform_grid(-0.5, 1.25, 0.125);
  const GrowthProfile p = extract_cone_growth(projection_operator(zeta), centered_cube(3), grid);
  EXPECT_LE(p.cross_deviation, 1e-6);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const double want = t >= 1 ? 0.0 : t >= 0 ? std::pow(1 - t, 3) / 3 : t * t - t + 1.0 / 3;
    EXPECT_NEAR(p.psi[i], want, 1e-12) << "t=" << t;
  }
}

TEST(Growth, DifferenceProfileAndDerivativeLaw) {
  const WeightFunction zeta = WeightFunction::tent();
  const std::vector<double> grid = uniform_grid(-0.5, 1.5, 1.0 / 64);
  const GrowthProfile p = extract_cone_growth(difference_operator(zeta), standard_simplex(3), grid);
  EXPECT_NEAR(p.psi[32], 0.5, 1e-12);
  const Report r = check_growth_derivative_law(p, zeta, 3, Variance::Covariant, 1e-4, 1.0 / 16);
  EXPECT_TRUE(r.pass) << r.max_residual;
  EXPECT_GT(r.witness.at("skipped"), 0.0);
  EXPECT_TRUE(check_growth_limit(p, zeta, 1e-8).pass);
}

TEST(Growth, ThirdDifferencesInDimensionFour) {
  const WeightFunction zeta = WeightFunction::tent();
  const std::vector<double> grid = uniform_grid(-0.25, 1.25, 1.0 / 32);
  const GrowthProfile p = extract_cone_growth(projection_operator(zeta), centered_cube(4), grid);
  EXPECT_NEAR(p.psi[8], 3.0 * zeta.moment(2), 1e-10);
  const Report r = check_growth_derivative_law(p, zeta, 4, Variance::Contravariant, 1e-3, 1.0 / 16);
  EXPECT_TRUE(r.pass) << r.max_residual;
}

TEST(Growth, LimitAndInputValidation) {
  const WeightFunction zeta = WeightFunction::tent();
  GrowthProfile p;
  p.t = {0.0, 0.5, 1.0, 1.5, 2.0};
  p.psi = {1.0, 0.5, 1e-3, 0.0, 0.0};
  EXPECT_FALSE(check_growth_limit(p, zeta, 1e-8).pass);
  p.psi = {1.0, 2.0, 0.0, 0.0, 0.0};
  EXPECT_FALSE(check_growth_limit(p, zeta, 1e-8).pass);
  p.t = {0.0, 0.1, 0.3, 0.4, 0.5};
  EXPECT_THROW(check_growth_derivative_law(p, zeta, 3, Variance::Contravariant, 1e-3), InvalidArgument);
  p.t = uniform_grid(0.0, 0.5, 0.125);
  EXPECT_THROW(check_growth_derivative_law(p, zeta, 5, Variance::Contravariant, 1e-3), InvalidArgument);
  const Polytope flat = convex_hull({vec({0, 0, 0}), vec({1, 0, 0})});
  EXPECT_THROW(extract_cone_growth(projection_operator(zeta), flat, p.t), Error);
}

TEST(IndicatorLaw, ScalesWithTheWeight) {
  const WeightFunction zeta = WeightFunction::tent();
  for (const auto& op : {projection_operator(zeta), difference_operator(zeta),
                         level_set_operator(zeta), lyz_cosine_operator(zeta)}) {
    const Report r = check_indicator_law(op, polytope_p(), {0.0, 0.25, 0.9, 1.5},
                                         few_directions(), 1e-7);
    EXPECT_TRUE(r.pass) << op.name << " " << r.max_residual;
  }
  const OperatorHandle doubled = projection_operator(zeta.scaled(2.0));
  const auto a = doubled.evaluate(indicator(unit_cube(3), 0.5), few_directions());
  const auto b = projection_operator(zeta).evaluate(indicator(unit_cube(3), 0.5), few_directions());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], 2.0 * b[i], 1e-13);
}

TEST(CovariantDecomposition, DifferenceBodyHasNoMomentComponents) {
  const WeightFunction zeta = WeightFunction::tent();
  const Report r = check_covariant_decomposition(difference_operator(zeta), 3, {-0.25, 0.0, 0.5}, 1e-9);
  EXPECT_TRUE(r.pass) << r.max_residual;
  EXPECT_LE(r.witness.at("max_moment_coefficient"), 1e-9);
}

TEST(CovariantDecomposition, LevelSetBodyIsNotSymmetric) {
  const WeightFunction zeta = WeightFunction::tent();
  const Report r = check_covariant_decomposition(level_set_operator(zeta), 3, {0.0, 0.5}, 1e-9);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.witness.at("max_psi1_minus_psi2"), 0.5, 1e-9);
}

}  // namespace
}  // namespace funcbody
