#include "appendix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "summation.hpp"

namespace pearle {

namespace {

// -zeta(-1/2): Euler-Maclaurin constant of the h^{3/2} term a sqrt
// endpoint singularity contributes to an equispaced Riemann sum.
constexpr double kSqrtEndpointConstant = 0.20788622497735456602;

}  // namespace

Grid Grid::make(std::int64_t n, double eps) {
  if (n < 2) {
    throw std::invalid_argument("Grid::make: need at least 2 points");
  }
  if (!(eps >= 0.0 && eps < 0.5)) {
    throw std::invalid_argument("Grid::make: eps must be in [0, 0.5)");
  }
  Grid grid;
  grid.n = n;
  grid.eps = eps;
  grid.step = (1.0 - 2.0 * eps) / static_cast<double>(n - 1);
  grid.points.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    grid.points[static_cast<std::size_t>(i)] =
        eps + static_cast<double>(i) * grid.step;
  }
  return grid;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.n == b.n && a.eps == b.eps;
}

bool check_mu_symmetry(const GridFunction& mu, double tol) {
  const std::vector<double>& z = mu.grid.points;
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double reflected = std::sqrt(1.0 - z[i] * z[i]);
    // Linear interpolation of mu at the reflected abscissa, clamped to the
    // grid range (the eps margins are negligible at tol scale).
    const double t =
        std::clamp((reflected - z.front()) / mu.grid.spacing(), 0.0,
                   static_cast<double>(n - 1));
    const auto lo = static_cast<std::size_t>(t);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = t - static_cast<double>(lo);
    const double interpolated =
        mu.values[lo] + frac * (mu.values[hi] - mu.values[lo]);
    if (std::abs(mu.values[i] - interpolated) > tol) {
      return false;
    }
  }
  return true;
}

GridFunction mu_from_g_constant(const Grid& grid, double c) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("mu_from_g_constant: c must be positive");
  }
  return GridFunction::sample(
      grid, [c](double x) { return 2.0 * c * x * std::sqrt(1.0 - x * x); });
}

GridFunction inner_bracket(const GridFunction& mu) {
  const std::vector<double>& z = mu.grid.points;
  const std::vector<double>& m = mu.values;
  if (z.size() != m.size()) {
    throw std::invalid_argument("inner_bracket: grid/value length mismatch");
  }
  const std::size_t n = z.size();
  const double h = mu.grid.spacing();
  const double endpoint = kSqrtEndpointConstant * h * std::sqrt(h);

  // First integral: int_0^1 sqrt(1-z^2) mu(z) dz. Near z = 1 the integrand
  // behaves like sqrt(2) mu(1) sqrt(1-z), hence the endpoint term.
  CompensatedSum first_sum;
  for (std::size_t i = 0; i < n; ++i) {
    first_sum.add(std::sqrt(1.0 - z[i] * z[i]) * m[i]);
  }
  const double first =
      first_sum.value() * h + endpoint * std::sqrt(2.0) * m[n - 1];

  GridFunction out;
  out.grid = mu.grid;
  out.values.resize(n);
  // Column j: int_0^{x_j} sqrt(1 - z^2/x_j^2) mu(z) dz via the masked kernel
  // (zero for z > x_j); local behaviour sqrt(2/x_j) mu(x_j) sqrt(x_j - z)
  // at the upper limit gives that column's endpoint term.
  for (std::size_t j = 0; j < n; ++j) {
    const double x = z[j];
    CompensatedSum col;
    for (std::size_t i = 0; i < j; ++i) {
      const double ratio = z[i] / x;
      col.add(std::sqrt(1.0 - ratio * ratio) * m[i]);
    }
    const double second =
        col.value() * h + endpoint * std::sqrt(2.0 / x) * m[j];
    out.values[j] = x * x * (first - second) / (1.0 - x * x);
  }
  return out;
}

GridFunction second_derivative(const GridFunction& f, std::int64_t trim) {
  if (trim < 0) {
    throw std::invalid_argument("second_derivative: trim must be >= 0");
  }
  const auto n = static_cast<std::int64_t>(f.values.size());
  if (n < trim + 3) {
    throw std::invalid_argument(
        "second_derivative: need at least trim + 3 points");
  }
  const std::int64_t retained = std::min(n - trim, n - 2);
  const double h2 = f.grid.spacing() * f.grid.spacing();

  GridFunction out;
  out.grid = f.grid;
  out.values.resize(static_cast<std::size_t>(retained));
  for (std::int64_t j = 0; j < retained; ++j) {
    const auto i = static_cast<std::size_t>(j);
    out.values[i] =
        (f.values[i + 2] - 2.0 * f.values[i + 1] + f.values[i]) / h2;
  }
  out.grid.points.resize(static_cast<std::size_t>(retained));
  out.grid.n = retained;
  return out;
}

GridFunction candidate_density(const MuSpec& mu_spec, const Grid& grid,
                               std::int64_t trim) {
  GridFunction mu;
  switch (mu_spec.kind) {
    case MuSpec::Kind::Constant:
      mu = GridFunction::sample(grid, [](double) { return 1.0; });
      break;
    case MuSpec::Kind::GConstant:
      mu = mu_from_g_constant(grid, 1.0);
      break;
    case MuSpec::Kind::Custom:
      if (!(mu_spec.custom.grid == grid)) {
        throw std::invalid_argument(
            "candidate_density: custom mu must be sampled on the same grid");
      }
      if (!check_mu_symmetry(mu_spec.custom, 1e-6)) {
        throw std::invalid_argument(
            "candidate_density: custom mu violates mu(x) = mu(sqrt(1-x^2))");
      }
      mu = mu_spec.custom;
      break;
  }

  GridFunction h = second_derivative(inner_bracket(mu), trim);
  CompensatedSum sum;
  for (double v : h.values) sum.add(v);
  const double mean = sum.value() / static_cast<double>(h.values.size());
  for (double& v : h.values) v /= mean;
  return h;
}

PositivitySummary assess_positivity(const GridFunction& h) {
  PositivitySummary summary;
  if (h.values.empty()) return summary;
  summary.min = h.values.front();
  summary.max = h.values.front();
  std::size_t negatives = 0;
  for (double v : h.values) {
    summary.min = std::min(summary.min, v);
    summary.max = std::max(summary.max, v);
    if (v < 0.0) ++negatives;
  }
  summary.has_negative = negatives > 0;
  summary.negative_fraction =
      static_cast<double>(negatives) / static_cast<double>(h.values.size());
  return summary;
}

}  // namespace pearle
