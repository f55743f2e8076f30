#include "estimators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pearle {

double singlet_target(double angle_rad, Convention convention) {
  const double c = std::cos(angle_rad);
  return convention == Convention::Outcomes ? -c : c;
}

namespace {

inline int sign_of(double x) { return x >= 0.0 ? 1 : -1; }

struct PairTally {
  std::int64_t outcomes_sum = 0;   // sum of sign(A)*sign(B)
  std::int64_t alignment_sum = 0;  // sum of sign(u.a)*sign(u.b)
  std::uint64_t n_detected = 0;
};

// Single pass over the states; summation is integer so the result is exact
// and independent of traversal order.
PairTally tally_pairs(std::span<const HiddenPairState> states,
                      const UnitVector3& a, const UnitVector3& b) {
  PairTally tally;
  for (const HiddenPairState& state : states) {
    const double ca = dot(state.u, a);
    const double cb = dot(state.u, b);
    if (std::abs(ca) >= state.s && std::abs(cb) >= state.s) {
      const int sa = sign_of(ca);
      tally.alignment_sum += sa * sign_of(cb);
      tally.outcomes_sum += sa * sign_of(-cb);
      ++tally.n_detected;
    }
  }
  return tally;
}

CorrelationEstimate estimate_from_tally(const PairTally& tally,
                                        Convention convention) {
  CorrelationEstimate estimate;
  estimate.n_detected = tally.n_detected;
  if (tally.n_detected == 0) {
    estimate.correlation = std::numeric_limits<double>::quiet_NaN();
    return estimate;
  }
  const std::int64_t sum = convention == Convention::Outcomes
                               ? tally.outcomes_sum
                               : tally.alignment_sum;
  estimate.correlation =
      static_cast<double>(sum) / static_cast<double>(tally.n_detected);
  return estimate;
}

}  // namespace

CorrelationEstimate estimate_correlation(std::span<const HiddenPairState> states,
                                         const UnitVector3& a,
                                         const UnitVector3& b,
                                         Convention convention) {
  if (states.empty()) {
    throw std::invalid_argument("estimate_correlation: no states");
  }
  return estimate_from_tally(tally_pairs(states, a, b), convention);
}

double estimate_detection_rate(std::span<const HiddenPairState> states,
                               const UnitVector3& a, const UnitVector3& b) {
  if (states.empty()) {
    throw std::invalid_argument("estimate_detection_rate: no states");
  }
  const PairTally tally = tally_pairs(states, a, b);
  return static_cast<double>(tally.n_detected) /
         static_cast<double>(states.size());
}

double SweepResult::max_abs_deviation() const {
  double max_dev = 0.0;
  for (const AngleRecord& record : records) {
    const double dev = std::abs(record.correlation - record.target);
    if (dev > max_dev) max_dev = dev;
  }
  return max_dev;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.pairs < 1) {
    throw std::invalid_argument("run_sweep: pairs must be >= 1");
  }
  if (!(config.step_deg > 0.0 && config.step_deg <= 360.0)) {
    throw std::invalid_argument("run_sweep: step_deg must be in (0, 360]");
  }
  const double intervals_real = 360.0 / config.step_deg;
  const auto intervals = static_cast<std::int64_t>(std::llround(intervals_real));
  if (std::abs(intervals_real - static_cast<double>(intervals)) > 1e-9) {
    throw std::invalid_argument("run_sweep: step_deg must divide 360");
  }

  RandomStream rng(config.seed);
  std::vector<HiddenPairState> states;
  if (!config.fresh_per_angle) {
    states = sample_states(rng, config.pairs);
  }

  const double beta_rad = config.beta_deg * kPi / 180.0;
  const UnitVector3 b = equatorial_direction(beta_rad);

  SweepResult result;
  result.config = config;
  result.records.resize(static_cast<std::size_t>(intervals) + 1);
  for (std::int64_t i = 0; i < intervals; ++i) {
    if (config.fresh_per_angle) {
      states = sample_states(rng, config.pairs);
    }
    const double angle_deg = static_cast<double>(i) * config.step_deg;
    const double angle_rad = angle_deg * kPi / 180.0;
    const UnitVector3 a = equatorial_direction(angle_rad);

    const PairTally tally = tally_pairs(states, a, b);
    const CorrelationEstimate estimate =
        estimate_from_tally(tally, config.convention);

    AngleRecord& record = result.records[static_cast<std::size_t>(i)];
    record.angle_deg = angle_deg;
    record.n_detected = tally.n_detected;
    record.n_pairs = config.pairs;
    record.correlation = estimate.correlation;
    record.target = singlet_target(angle_rad - beta_rad, config.convention);
    record.detection_rate = static_cast<double>(tally.n_detected) /
                            static_cast<double>(config.pairs);
    record.stderr_bound =
        1.0 / std::sqrt(static_cast<double>(tally.n_detected));
  }

  // Last grid angle (360) equals the first: copy rather than recompute.
  AngleRecord& last = result.records.back();
  last = result.records.front();
  last.angle_deg = 360.0;
  return result;
}

}  // namespace pearle
