#include "funcbody/convex_functions.hpp"
#include "funcbody/errors.hpp"
#include "funcbody/valuation_lab.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace funcbody {
namespace {

using testing::Gen;
using testing::vec;

Polytope box(const Vector& lo, const Vector& hi) {
  std::vector<Vector> pts;
  const int n = static_cast<int>(lo.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1) ? hi[i] : lo[i];
    pts.push_back(v);
  }
  return convex_hull(pts);
}

// Max of random affine pieces on the box [-2, 2]^n.
PiecewiseAffineConvex random_function(Gen& g, int n) {
  std::vector<AffinePiece> pieces;
  for (int i = 0; i < g.integer(1, 5); ++i) pieces.push_back({g.point(n), g.uniform(-1.0, 1.0)});
  std::vector<Halfspace> domain;
  for (int i = 0; i < n; ++i) {
    domain.push_back({unit_vector(n, i), 2.0});
    domain.push_back({-unit_vector(n, i), 2.0});
  }
  return PiecewiseAffineConvex(std::move(pieces), std::move(domain), n);
}

double brute_evaluate(const PiecewiseAffineConvex& u, const Vector& x) {
  for (const auto& h : u.domain()) {
    if (h.normal.dot(x) > h.offset + 1e-12) return kInfinity;
  }
  double best = u.pieces().empty() ? 0.0 : -kInfinity;
  for (const auto& p : u.pieces()) best = std::max(best, p.a.dot(x) + p.b);
  return best;
}

TEST(PiecewiseAffine, EvaluateIsMaxOfPiecesInsideDomain) {
  Gen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseAffineConvex u = random_function(g, 3);
    for (int k = 0; k < 20; ++k) {
      const Vector x = g.point(3, 3.0);
      EXPECT_EQ(u.evaluate(x), brute_evaluate(u, x));
    }
  }
}

TEST(PiecewiseAffine, SublevelSetsMatchPointMembership) {
  Gen g(32);
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseAffineConvex u = random_function(g, 3);
    const double t = u.minimum() + g.uniform(0.05, 2.0);
    const auto s = u.sublevel(t);
    ASSERT_TRUE(s.has_value());
    for (const auto& v : s->vertices()) EXPECT_LE(u.evaluate(v), t + 1e-9);
    for (int k = 0; k < 200; ++k) {
      const Vector x = g.point(3, 2.0);
      const double fx = u.evaluate(x);
      if (fx < t - 1e-9) EXPECT_TRUE(s->contains(x, 1e-9));
      if (fx > t + 1e-9) EXPECT_FALSE(s->contains(x, 1e-12));
    }
  }
}

TEST(PiecewiseAffine, MinimumAgreesWithBisectionAndSampling) {
  Gen g(33);
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewiseAffineConvex u = random_function(g, 3);
    const double scale = std::max(1.0, std::abs(u.minimum()));
    EXPECT_NEAR(u.minimum_by_bisection(1e-10), u.minimum(), 1e-8 * scale);
    EXPECT_FALSE(u.sublevel(u.minimum() - 1e-6).has_value());
    ASSERT_TRUE(u.sublevel(u.minimum()).has_value());
    for (int k = 0; k < 100; ++k) EXPECT_GE(u.evaluate(g.point(3, 2.0)), u.minimum() - 1e-12);
  }
}

TEST(PiecewiseAffine, EventLevelsAreSortedAndStartAtTheMinimum) {
  Gen g(34);
  const PiecewiseAffineConvex u = random_function(g, 3);
  const auto& ev = u.event_levels();
  ASSERT_FALSE(ev.empty());
  EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
  EXPECT_DOUBLE_EQ(ev.front(), u.minimum());
}

TEST(PiecewiseAffine, VertexCountIsConstantBetweenEvents) {
  Gen g(35);
  for (int trial = 0; trial < 10; ++trial) {
    const PiecewiseAffineConvex u = random_function(g, 3);
    const auto& ev = u.event_levels();
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
      if (ev[i + 1] - ev[i] < 1e-6) continue;
      const double a = ev[i] + 0.25 * (ev[i + 1] - ev[i]);
      const double b = ev[i] + 0.75 * (ev[i + 1] - ev[i]);
      EXPECT_EQ(u.sublevel(a)->size(), u.sublevel(b)->size());
    }
  }
}

TEST(PiecewiseAffine, RejectsNonCoerciveInput) {
  EXPECT_THROW(PiecewiseAffineConvex({{vec({1.0}), 0.0}}, {}, 1), InvalidArgument);
  EXPECT_THROW(PiecewiseAffineConvex({{vec({1.0, 0.0}), 0.0}, {vec({-1.0, 0.0}), 0.0}}, {}, 2),
               InvalidArgument);
  EXPECT_NO_THROW(PiecewiseAffineConvex({{vec({1.0}), 0.0}, {vec({-1.0}), 0.0}}, {}, 1));
}

TEST(PiecewiseAffine, EmptyPieceListIsZeroOnTheDomain) {
  const Polytope c = centered_cube(2);
  const PiecewiseAffineConvex u({}, c.halfspaces(), 2);
  EXPECT_DOUBLE_EQ(u.evaluate(vec({0.5, 0.5})), 0.0);
  EXPECT_EQ(u.evaluate(vec({1.5, 0.5})), kInfinity);
  EXPECT_NEAR(hausdorff_distance(*u.sublevel(0.0), c), 0.0, 1e-12);
  EXPECT_FALSE(u.sublevel(-1e-6).has_value());
}

TEST(ConeFunction, SublevelSetsAreDilates) {
  Gen g(36);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope k = g.body(3);
    const PiecewiseAffineConvex l = cone_function(k);
    EXPECT_NEAR(l.minimum(), 0.0, 1e-12);
    for (double t : {0.5, 1.0, 2.5}) {
      EXPECT_NEAR(hausdorff_distance(*l.sublevel(t), scale(k, t)), 0.0, 1e-9);
    }
    EXPECT_EQ(l.sublevel(0.0)->affine_dim(), 0);
    EXPECT_FALSE(l.sublevel(-0.1).has_value());
  }
}

TEST(ConeFunction, OriginOnTheBoundary) {
  const Polytope t = standard_simplex(3);
  const PiecewiseAffineConvex l = cone_function(t);
  EXPECT_NEAR(l.evaluate(vec({0.25, 0.25, 0.25})), 0.75, 1e-14);
  EXPECT_EQ(l.evaluate(vec({-0.1, 0.0, 0.0})), kInfinity);
  EXPECT_THROW(cone_function(translate(t, vec({1, 1, 1}))), InvalidArgument);
}

TEST(Indicator, ConstantOnTheSetAndInfiniteOutside) {
  const Polytope c = unit_cube(3);
  const PiecewiseAffineConvex u = indicator(c, 0.4);
  EXPECT_DOUBLE_EQ(u.evaluate(vec({0.5, 0.5, 0.5})), 0.4);
  EXPECT_EQ(u.evaluate(vec({1.5, 0.5, 0.5})), kInfinity);
  EXPECT_FALSE(u.sublevel(0.3).has_value());
  EXPECT_NEAR(hausdorff_distance(*u.sublevel(0.4), c), 0.0, 1e-12);
  EXPECT_NEAR(hausdorff_distance(*u.sublevel(7.0), c), 0.0, 1e-12);
}

TEST(Actions, SublevelSetsTransformCovariantly) {
  Gen g(37);
  const PiecewiseAffineConvex u = random_function(g, 3);
  const double t = u.minimum() + 0.7;
  const Polytope s = *u.sublevel(t);
  const UnimodularMap phi(g.matrix(3));
  const Vector x = g.point(3);
  EXPECT_NEAR(hausdorff_distance(*act_linear(u, phi).sublevel(t), linear_image(s, phi)), 0.0, 1e-9);
  EXPECT_NEAR(hausdorff_distance(*act_translate(u, x).sublevel(t), translate(s, x)), 0.0, 1e-9);
  EXPECT_NEAR(hausdorff_distance(*act_add_constant(u, 0.3).sublevel(t + 0.3), s), 0.0, 1e-9);
  EXPECT_NEAR(hausdorff_distance(*reflect_arg(u).sublevel(t), reflect(s)), 0.0, 1e-9);
  const Vector y = g.point(3);
  EXPECT_NEAR(act_linear(u, phi).evaluate(phi.apply(y)), u.evaluate(y), 1e-12);
}

TEST(Lattice, PointwiseMaxIntersectsSublevelSets) {
  Gen g(38);
  const PiecewiseAffineConvex u = random_function(g, 3), v = random_function(g, 3);
  const PiecewiseAffineConvex w = pointwise_max(u, v);
  for (int k = 0; k < 50; ++k) {
    const Vector x = g.point(3, 2.5);
    EXPECT_EQ(w.evaluate(x), std::max(u.evaluate(x), v.evaluate(x)));
  }
}

TEST(Lattice, NestedConesAreCertified) {
  const PiecewiseAffineConvex l = cone_function(centered_cube(3));
  const LatticePair pair = pointwise_min_certified(act_add_constant(l, 0.2), l);
  EXPECT_TRUE(pair.certified);
  const LatticeMin m = lattice_min(pair);
  Gen g(39);
  for (int k = 0; k < 50; ++k) {
    const Vector x = g.point(3, 2.0);
    EXPECT_NEAR(m.evaluate(x), l.evaluate(x), 1e-12);
  }
  EXPECT_NEAR(m.minimum(), 0.0, 1e-12);
}

TEST(Lattice, DisjointIndicatorsAreRejected) {
  const Polytope a = box(vec({0, 0, 0}), vec({1, 1, 1}));
  const Polytope b = box(vec({2, 0, 0}), vec({3, 1, 1}));
  const LatticePair pair = pointwise_min_certified(indicator(a), indicator(b));
  EXPECT_FALSE(pair.certified);
  EXPECT_GT(pair.max_defect, 1e-3);
  EXPECT_THROW(lattice_min(pair), InvalidArgument);
}

TEST(Lattice, CrossingConesAreRejected) {
  const PiecewiseAffineConvex a = cone_function(box(vec({-1, -0.1, -0.1}), vec({1, 0.1, 0.1})));
  const PiecewiseAffineConvex b = cone_function(box(vec({-0.1, -1, -0.1}), vec({0.1, 1, 0.1})));
  EXPECT_FALSE(pointwise_min_certified(a, b).certified);
}

TEST(Lattice, TruncatedConePairMinimumIsTheConeOfP) {
  const PiecewiseAffineConvex lp = cone_function(polytope_p());
  for (double t : {0.25, 0.5, 0.8}) {
    const LatticePair pair = truncated_cone_pair(t);
    ASSERT_TRUE(pair.certified) << "t = " << t;
    const std::vector<double> levels{0.1, 0.5, 1.0, 1.5, 2.0};
    for (double d : sublevel_hausdorff_profile(lattice_min(pair), lp, levels)) {
      EXPECT_NEAR(d, 0.0, 1e-9);
    }
  }
}

TEST(Lattice, ConstructedFamiliesAreAllCertified) {
  const std::vector<LatticePair> pairs = lattice_families();
  ASSERT_EQ(pairs.size(), 25u);
  for (const auto& p : pairs) {
    EXPECT_TRUE(p.certified);
    EXPECT_LE(p.max_defect, 1e-8);
  }
}

TEST(ConvexFunctionVariant, FreeFunctionsDispatch) {
  const PiecewiseAffineConvex l = cone_function(centered_cube(2));
  const ConvexFunction f = l;
  EXPECT_EQ(dim(f), 2);
  EXPECT_DOUBLE_EQ(evaluate(f, vec({0.5, 0.25})), 0.5);
  EXPECT_DOUBLE_EQ(minimum(f), 0.0);
  EXPECT_TRUE(sublevel(f, 1.0).has_value());
  const ConvexFunction g = act_add_constant(f, 1.0);
  EXPECT_DOUBLE_EQ(minimum(g), 1.0);
}

TEST(SublevelProfile, InfiniteWhenExactlyOneIsEmpty) {
  const PiecewiseAffineConvex l = cone_function(centered_cube(3));
  const auto d = sublevel_hausdorff_profile(l, act_add_constant(l, 1.0), {-0.5, 0.5, 2.0});
  EXPECT_EQ(d[0], 0.0);
  EXPECT_EQ(d[1], kInfinity);
  EXPECT_NEAR(d[2], std::sqrt(3.0), 1e-9);
}

}  // namespace
}  // namespace funcbody
