#include "funcbody/weight_functions.hpp"

#include "funcbody/errors.hpp"

#include <cmath>

namespace funcbody {

WeightFunction::WeightFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.size() != values_.size()) {
    throw InvalidArgument("weight needs matching breakpoints and values (at least two)");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) || !std::isfinite(values_[i])) {
      throw InvalidArgument("non-finite weight data");
    }
    if (values_[i] < 0.0) throw InvalidArgument("weight must be nonnegative");
    if (i > 0 && breakpoints_[i] <= breakpoints_[i - 1]) {
      throw InvalidArgument("breakpoints must increase strictly");
    }
    if (i > 0 && values_[i] > values_[i - 1]) throw InvalidArgument("weight must be nonincreasing");
  }
  if (values_.back() != 0.0) throw InvalidArgument("weight must vanish at its last breakpoint");
  if (values_.front() <= 0.0) throw InvalidArgument("weight must not vanish identically");
}

WeightFunction WeightFunction::tent(double height, double width) {
  return WeightFunction({0.0, width}, {height, 0.0});
}

double WeightFunction::eval(double t) const {
  if (t <= breakpoints_.front()) return values_.front();
  if (t >= breakpoints_.back()) return 0.0;
  std::size_t i = 1;
  while (breakpoints_[i] < t) ++i;
  const double lambda = (t - breakpoints_[i - 1]) / (breakpoints_[i] - breakpoints_[i - 1]);
  return values_[i - 1] + lambda * (values_[i] - values_[i - 1]);
}

double WeightFunction::generalized_inverse(double r) const {
  if (!(r > 0.0) || r > values_.front()) throw InvalidArgument("level outside (0, zeta(t0)]");
  std::size_t i = 0;
  while (i + 1 < values_.size() && values_[i + 1] >= r) ++i;
  const double drop = values_[i] - values_[i + 1];
  return breakpoints_[i] + (values_[i] - r) / drop * (breakpoints_[i + 1] - breakpoints_[i]);
}

double WeightFunction::moment(int k) const {
  if (k < 0) throw InvalidArgument("moment order must be nonnegative");
  auto power_integral = [](double a, double b, int p) {
    return (std::pow(b, p + 1) - std::pow(a, p + 1)) / (p + 1);
  };
  double total = 0.0;
  if (breakpoints_.front() > 0.0) total += values_.front() * power_integral(0.0, breakpoints_.front(), k);
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const double t0 = breakpoints_[i], t1 = breakpoints_[i + 1];
    const double a = std::max(t0, 0.0);
    if (t1 <= a) continue;
    const double slope = (values_[i + 1] - values_[i]) / (t1 - t0);
    const double intercept = values_[i] - slope * t0;
    total += intercept * power_integral(a, t1, k) + slope * power_integral(a, t1, k + 1);
  }
  return total;
}

std::vector<WeightFunction::Slope> WeightFunction::stieltjes_slopes() const {
  std::vector<Slope> out;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const double width = breakpoints_[i + 1] - breakpoints_[i];
    out.push_back({breakpoints_[i], breakpoints_[i + 1], (values_[i] - values_[i + 1]) / width});
  }
  return out;
}

WeightFunction WeightFunction::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidArgument("weight scale must be positive");
  std::vector<double> v = values_;
  for (auto& x : v) x *= c;
  return WeightFunction(breakpoints_, std::move(v));
}

}  // namespace funcbody
