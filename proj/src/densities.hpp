#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace pearle {

// Closed-form distributions of the radial amplitude R and the detection
// threshold S = cos(R*pi/2) of the hidden-variable model, plus the grid
// checks run against them. All throw std::domain_error outside [0, 1]
// unless noted.

// f_R(r) = (4*pi/3) * sin(r*pi/2) / (1 + cos(r*pi/2))^3, monotone increasing.
double r_density(double r);

// Pr(R <= r) = (1/3) * (4 / (1 + cos(r*pi/2))^2 - 1).
double r_cdf(double r);

// f_S(s) = (8/3) * (1+s)^-3, from S = 2/sqrt(V) - 1 with V ~ Unif(1, 4).
double s_density(double s);

// Pr(S <= s) = (4/3) * (1 - (1+s)^-2).
double s_cdf(double s);

// 3 r^2: the density R would have had were the hidden points uniform in the
// unit ball. No domain restriction.
double uniform_ball_density(double r);

// Pearle's original formulas (1) and (22) combined:
// (16/3) * sin(r*pi/2) / (1 + cos(r*pi/2))^3. Mis-normalized: integrates to
// 4/pi, not 1. Equals (4/pi) * r_density(r). No domain restriction.
double pearle_combined_density(double r);

struct RiemannBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Guaranteed bracketing of the unit integral of r_density: evaluate on the
// regular (n+1)-point grid over [0, 1]; because the density is monotone
// increasing, the mean of the first n values is a lower bound and the mean
// of the last n values an upper bound. Compensated summation keeps the
// results reproducible to a few ulp.
RiemannBounds riemann_bounds(std::int64_t n_intervals);

// Trapezoid-rule integral of pearle_combined_density over [0, 1] on the same
// grid; approaches 4/pi as the grid refines.
double pearle_combined_integral(std::int64_t n_intervals);

// One-sample Kolmogorov-Smirnov statistic: sup distance between the
// empirical CDF of `samples` and `cdf`.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Asymptotic one-sample critical value sqrt(-ln(alpha/2)/2)/sqrt(n);
// 1.6276/sqrt(n) at alpha = 0.01.
double ks_critical_value(std::size_t n, double alpha);

}  // namespace pearle
