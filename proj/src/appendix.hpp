#pragma once

#include <cstdint>
#include <vector>

namespace pearle {

// Regular grid of n points from eps to 1-eps. The tiny margin keeps the
// 1/(1-x^2) prefactor and the kernel column at x = 1 finite. A truncated
// result grid (see second_derivative) keeps the original step.
struct Grid {
  std::int64_t n = 0;
  double eps = 1e-9;
  double step = 0.0;
  std::vector<double> points;

  static Grid make(std::int64_t n, double eps = 1e-9);
  double spacing() const { return step; }
};

bool operator==(const Grid& a, const Grid& b);

// A real function sampled on a Grid.
struct GridFunction {
  Grid grid;
  std::vector<double> values;

  template <typename F>
  static GridFunction sample(const Grid& g, F&& f) {
    GridFunction out;
    out.grid = g;
    out.values.reserve(g.points.size());
    for (double x : g.points) out.values.push_back(f(x));
    return out;
  }
};

// Generator function for the family of valid threshold distributions.
struct MuSpec {
  enum class Kind { Constant, GConstant, Custom };
  Kind kind = Kind::Constant;
  GridFunction custom;  // only for Kind::Custom

  static MuSpec constant() { return MuSpec{Kind::Constant, {}}; }
  static MuSpec g_constant() { return MuSpec{Kind::GConstant, {}}; }
  static MuSpec custom_mu(GridFunction mu) {
    return MuSpec{Kind::Custom, std::move(mu)};
  }
};

// True iff mu(x) = mu(sqrt(1-x^2)) within tol at every grid point, with
// linear interpolation at the reflected abscissae.
bool check_mu_symmetry(const GridFunction& mu, double tol);

// The generator obtained from a constant pair-detection probability g = c:
// mu(x) = 2 c x sqrt(1-x^2). The scale is irrelevant downstream (candidate
// densities are normalized), so c only fixes the overall height.
GridFunction mu_from_g_constant(const Grid& grid, double c);

// The bracketed quantity
//   x^2/(1-x^2) * [ int_0^1 sqrt(1-z^2) mu(z) dz
//                   - int_0^x sqrt(1 - z^2/x^2) mu(z) dz ]
// evaluated on the grid. Both integrals are Riemann sums over the full grid
// with the kernel zeroed beyond the upper limit (so one masked pass covers
// the [0, x] integral), scaled by the grid spacing, plus the h^{3/2}
// Euler-Maclaurin endpoint term that the square-root singularities of the
// integrands would otherwise leave behind. O(n) memory, O(n^2) time.
GridFunction inner_bracket(const GridFunction& mu);

// Double forward difference divided by spacing^2, defined on the first
// min(n - trim, n - 2) points; the trimmed right end absorbs the
// instability of the difference quotient at x -> 1.
GridFunction second_derivative(const GridFunction& f, std::int64_t trim);

// Candidate density of the threshold S generated by mu: the second
// derivative of the inner bracket, normalized to mean 1 over the retained
// points. Custom mu must pass check_mu_symmetry at tol 1e-6 (asymmetric
// input is an error, not silently symmetrized) and must live on `grid`.
GridFunction candidate_density(const MuSpec& mu_spec, const Grid& grid,
                               std::int64_t trim);

struct PositivitySummary {
  double min = 0.0;
  double max = 0.0;
  bool has_negative = false;
  double negative_fraction = 0.0;
};

// Summary statistics over the retained grid points of a candidate density.
PositivitySummary assess_positivity(const GridFunction& h);

}  // namespace pearle
