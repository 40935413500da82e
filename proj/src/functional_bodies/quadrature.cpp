#include "funcbody/errors.hpp"
#include "funcbody/functional_bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace funcbody {

void QuadratureConfig::validate() const {
  if (nodes < 2) throw InvalidArgument("quadrature needs at least two nodes");
  if (!(tolerance > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  if (max_depth < 0) throw InvalidArgument("max refinement depth must be nonnegative");
}

std::vector<Vector> resolve_directions(const QuadratureConfig& cfg, int n) {
  if (cfg.directions.empty()) return direction_set(n, cfg.seed);
  for (const auto& z : cfg.directions) {
    if (z.size() != n) throw InvalidArgument("direction dimension mismatch");
  }
  return cfg.directions;
}

GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.x[n - 1 - i] = x;
    rule.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace {

class Adaptive {
 public:
  Adaptive(const std::function<Vector(double)>& f, const GaussRule& rule, double tol, double span,
           int max_depth, double density, std::vector<LevelNode>* nodes)
      : f_(f), rule_(rule), tol_(tol), span_(span), max_depth_(max_depth), density_(density),
        nodes_(nodes) {}

  IntervalIntegral run(double a, double b) {
    std::vector<LevelNode> scratch;
    const Vector coarse = apply(a, b, scratch);
    return refine(a, b, coarse, 0);
  }

 private:
  Vector apply(double a, double b, std::vector<LevelNode>& rec) const {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Vector sum;
    for (std::size_t i = 0; i < rule_.x.size(); ++i) {
      const double s = mid + half * rule_.x[i];
      const Vector v = f_(s);
      if (sum.size() == 0) sum = Vector::Zero(v.size());
      sum += (rule_.w[i] * half) * v;
      rec.push_back({s, rule_.w[i] * half * density_});
    }
    return sum;
  }

  IntervalIntegral refine(double a, double b, const Vector& coarse, int depth) {
    const double m = 0.5 * (a + b);
    std::vector<LevelNode> left_nodes, right_nodes;
    const Vector left = apply(a, m, left_nodes);
    const Vector right = apply(m, b, right_nodes);
    const Vector fine = left + right;
    const double err = fine.size() ? (fine - coarse).cwiseAbs().maxCoeff() : 0.0;
    const double scale = fine.size() ? fine.cwiseAbs().maxCoeff() : 0.0;
    const double allowed =
        std::max(tol_ * (b - a) / span_, 64.0 * std::numeric_limits<double>::epsilon() * scale);
    if (err <= allowed) {
      if (nodes_) {
        nodes_->insert(nodes_->end(), left_nodes.begin(), left_nodes.end());
        nodes_->insert(nodes_->end(), right_nodes.begin(), right_nodes.end());
      }
      return {fine, err};
    }
    if (depth >= max_depth_) throw QuadratureError("quadrature tolerance not met", err);
    IntervalIntegral l = refine(a, m, left, depth + 1);
    IntervalIntegral r = refine(m, b, right, depth + 1);
    return {l.value + r.value, l.error_estimate + r.error_estimate};
  }

  const std::function<Vector(double)>& f_;
  const GaussRule& rule_;
  double tol_;
  double span_;
  int max_depth_;
  double density_;
  std::vector<LevelNode>* nodes_;
};

}  // namespace

IntervalIntegral integrate_interval(double a, double b, const std::function<Vector(double)>& f,
                                    const QuadratureConfig& cfg, double tol) {
  cfg.validate();
  if (!(b > a)) throw InvalidArgument("empty integration interval");
  const GaussRule rule = gauss_legendre(cfg.nodes);
  Adaptive adaptive(f, rule, tol, b - a, cfg.max_depth, 1.0, nullptr);
  return adaptive.run(a, b);
}

LevelIntegral integrate_levels(const WeightFunction& zeta, const ConvexFunction& u,
                               const QuadratureConfig& cfg, const LevelIntegrand& integrand) {
  cfg.validate();
  const double umin = minimum(u);
  if (!(zeta.eval(umin) > 0.0)) throw VanishingFunctionError();
  const double lo = std::max(zeta.first_breakpoint(), umin);
  const double hi = zeta.support_end();

  std::vector<double> cuts{lo, hi};
  for (double t : zeta.breakpoints()) {
    if (t > lo && t < hi) cuts.push_back(t);
  }
  for (double t : event_levels(u)) {
    if (t > lo && t < hi) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> merged;
  for (double t : cuts) {
    if (merged.empty() || t - merged.back() > 1e-12 * std::max(1.0, std::abs(t))) {
      merged.push_back(t);
    }
  }
  merged.back() = hi;

  const GaussRule rule = gauss_legendre(cfg.nodes);
  const auto slopes = zeta.stieltjes_slopes();
  LevelIntegral result;
  for (std::size_t c = 0; c + 1 < merged.size(); ++c) {
    const double a = merged[c], b = merged[c + 1];
    const double mid = 0.5 * (a + b);
    double density = 0.0;
    for (const auto& sl : slopes) {
      if (mid > sl.lo && mid < sl.hi) density = sl.density;
    }
    if (density == 0.0) continue;
    const std::function<Vector(double)> f = [&](double s) -> Vector {
      return density * integrand(sublevel(u, s), s);
    };
    Adaptive adaptive(f, rule, cfg.tolerance, hi - lo, cfg.max_depth, density, &result.nodes);
    const IntervalIntegral part = adaptive.run(a, b);
    if (result.value.size() == 0) result.value = Vector::Zero(part.value.size());
    result.value += part.value;
    result.error_estimate += part.error_estimate;
  }
  if (result.value.size() == 0) throw VanishingFunctionError();
  return result;
}

}  // namespace funcbody
