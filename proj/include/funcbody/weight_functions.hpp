#pragma once

// Continuous, nonnegative, nonincreasing piecewise-linear weights with
// compact support: zeta = values[0] on (-inf, t_0], linear between
// breakpoints, 0 on [t_m, inf).

#include <vector>

namespace funcbody {

class WeightFunction {
 public:
  /// Throws InvalidArgument unless breakpoints strictly increase, values are
  /// nonincreasing and nonnegative, values.back() == 0 and values[0] > 0.
  WeightFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// height * max(0, 1 - t / width).
  static WeightFunction tent(double height = 1.0, double width = 1.0);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  double first_breakpoint() const { return breakpoints_.front(); }
  double support_end() const { return breakpoints_.back(); }
  double top() const { return values_.front(); }

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;

  /// sup{s : zeta(s) >= r} for r in (0, top()]. Throws InvalidArgument otherwise.
  double generalized_inverse(double r) const;

  /// int_0^inf t^k zeta(t) dt, exact.
  double moment(int k) const;

  struct Slope {
    double lo = 0.0;
    double hi = 0.0;
    double density = 0.0;  // -zeta' on (lo, hi)
  };
  /// Density of the measure -d zeta, one entry per segment (flat ones included).
  std::vector<Slope> stieltjes_slopes() const;

  WeightFunction scaled(double c) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

}  // namespace funcbody
