#include "funcbody/errors.hpp"
#include "funcbody/weight_functions.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

namespace funcbody {
namespace {

using testing::Gen;

double midpoint_rule(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(a + (i + 0.5) * h);
  return sum * h;
}

TEST(WeightFunction, TentValues) {
  const WeightFunction z = WeightFunction::tent();
  EXPECT_DOUBLE_EQ(z(-3.0), 1.0);
  EXPECT_DOUBLE_EQ(z(0.0), 1.0);
  EXPECT_DOUBLE_EQ(z(0.25), 0.75);
  EXPECT_DOUBLE_EQ(z(1.0), 0.0);
  EXPECT_DOUBLE_EQ(z(4.0), 0.0);
  const WeightFunction w = WeightFunction::tent(2.0, 4.0);
  EXPECT_DOUBLE_EQ(w(1.0), 1.5);
  EXPECT_DOUBLE_EQ(w.support_end(), 4.0);
  EXPECT_DOUBLE_EQ(w.top(), 2.0);
}

TEST(WeightFunction, RejectsInvalidData) {
  EXPECT_THROW(WeightFunction({0.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, 1.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({1.0, 0.0}, {1.0, 0.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, 1.0, 2.0}, {1.0, 2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, 1.0}, {1.0, 0.5}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, 1.0}, {0.0, 0.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, 1.0}, {-1.0, 0.0}), InvalidArgument);
  EXPECT_THROW(WeightFunction({0.0, NAN}, {1.0, 0.0}), InvalidArgument);
}

TEST(WeightFunction, TentMomentsClosedForm) {
  const WeightFunction z = WeightFunction::tent();
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(z.moment(k), 1.0 / ((k + 1.0) * (k + 2.0)), 1e-15);
  EXPECT_THROW(z.moment(-1), InvalidArgument);
}

TEST(WeightFunction, MomentsMatchNumericIntegration) {
  Gen g(41);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightFunction z = g.weight();
    for (int k : {0, 1, 2, 3}) {
      const double numeric = midpoint_rule(
          [&](double t) { return std::pow(t, k) * z(t); }, 0.0, std::max(z.support_end(), 0.0),
          200000);
      EXPECT_NEAR(z.moment(k), numeric, 1e-8);
    }
  }
}

TEST(WeightFunction, GeneralizedInverseIsTheUpperEndOfTheSuperlevelSet) {
  Gen g(42);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightFunction z = g.weight();
    for (int k = 0; k < 20; ++k) {
      const double r = g.uniform(1e-6, z.top());
      const double s = z.generalized_inverse(r);
      EXPECT_GE(z(s), r - 1e-12);
      EXPECT_LT(z(s + 1e-7), r);
    }
  }
  const WeightFunction t = WeightFunction::tent();
  EXPECT_THROW(t.generalized_inverse(0.0), InvalidArgument);
  EXPECT_THROW(t.generalized_inverse(1.5), InvalidArgument);
  EXPECT_NEAR(t.generalized_inverse(0.25), 0.75, 1e-15);
}

TEST(WeightFunction, FlatSegmentInverseTakesTheRightEnd) {
  const WeightFunction z({0.0, 1.0, 2.0, 3.0}, {1.0, 0.5, 0.5, 0.0});
  EXPECT_NEAR(z.generalized_inverse(0.5), 2.0, 1e-15);
}

TEST(WeightFunction, LayerCakeIdentity) {
  Gen g(43);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightFunction z = g.weight();
    const double area = midpoint_rule(
        [&](double r) { return std::max(z.generalized_inverse(r), 0.0); }, 0.0, z.top(), 200000);
    EXPECT_NEAR(area, z.moment(0), 1e-7);
  }
}

TEST(WeightFunction, StieltjesMassEqualsTheTop) {
  Gen g(44);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightFunction z = g.weight();
    double mass = 0.0;
    for (const auto& s : z.stieltjes_slopes()) {
      EXPECT_GE(s.density, 0.0);
      mass += s.density * (s.hi - s.lo);
    }
    EXPECT_NEAR(mass, z.top(), 1e-13);
  }
}

TEST(WeightFunction, ScalingIsLinear) {
  Gen g(45);
  const WeightFunction z = g.weight();
  const WeightFunction w = z.scaled(2.5);
  for (int k = 0; k < 20; ++k) {
    const double t = g.uniform(-1.0, 2.0);
    EXPECT_NEAR(w(t), 2.5 * z(t), 1e-14);
  }
  EXPECT_NEAR(w.moment(2), 2.5 * z.moment(2), 1e-14);
  EXPECT_THROW(z.scaled(0.0), InvalidArgument);
}

}  // namespace
}  // namespace funcbody
