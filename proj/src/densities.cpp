#include "densities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "model.hpp"
#include "summation.hpp"

namespace pearle {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + ": argument must be in [0, 1]");
  }
}

}  // namespace

double r_density(double r) {
  require_unit_interval(r, "r_density");
  const double c = std::cos(r * kPi / 2.0);
  const double s = std::sin(r * kPi / 2.0);
  const double d = 1.0 + c;
  return (4.0 * kPi / 3.0) * s / (d * d * d);
}

double r_cdf(double r) {
  require_unit_interval(r, "r_cdf");
  const double d = 1.0 + std::cos(r * kPi / 2.0);
  return (4.0 / (d * d) - 1.0) / 3.0;
}

double s_density(double s) {
  require_unit_interval(s, "s_density");
  const double d = 1.0 + s;
  return (8.0 / 3.0) / (d * d * d);
}

double s_cdf(double s) {
  require_unit_interval(s, "s_cdf");
  const double d = 1.0 + s;
  return (4.0 / 3.0) * (1.0 - 1.0 / (d * d));
}

double uniform_ball_density(double r) { return 3.0 * r * r; }

double pearle_combined_density(double r) {
  const double c = std::cos(r * kPi / 2.0);
  const double s = std::sin(r * kPi / 2.0);
  const double d = 1.0 + c;
  return (16.0 / 3.0) * s / (d * d * d);
}

RiemannBounds riemann_bounds(std::int64_t n_intervals) {
  if (n_intervals < 1) {
    throw std::invalid_argument("riemann_bounds: need at least one interval");
  }
  const double n = static_cast<double>(n_intervals);
  CompensatedSum lower;
  CompensatedSum upper;
  for (std::int64_t i = 0; i <= n_intervals; ++i) {
    const double f = r_density(static_cast<double>(i) / n);
    if (i < n_intervals) lower.add(f);
    if (i > 0) upper.add(f);
  }
  return RiemannBounds{lower.value() / n, upper.value() / n};
}

double pearle_combined_integral(std::int64_t n_intervals) {
  if (n_intervals < 1) {
    throw std::invalid_argument(
        "pearle_combined_integral: need at least one interval");
  }
  const double n = static_cast<double>(n_intervals);
  CompensatedSum sum;
  for (std::int64_t i = 0; i <= n_intervals; ++i) {
    const double f = pearle_combined_density(static_cast<double>(i) / n);
    sum.add(i == 0 || i == n_intervals ? 0.5 * f : f);
  }
  return sum.value() / n;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_statistic: empty sample");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double above = (static_cast<double>(i) + 1.0) / n - f;
    const double below = f - static_cast<double>(i) / n;
    sup = std::max(sup, std::max(above, below));
  }
  return sup;
}

double ks_critical_value(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(n));
}

}  // namespace pearle
