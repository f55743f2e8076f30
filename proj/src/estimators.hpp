#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "model.hpp"

namespace pearle {

// Which product is averaged over detected coincidences.
//
// Outcomes: the physical measurement products sign(A)*sign(B) with
//           A = u.a, B = -u.b; the model prediction is -a.b.
// Alignment: sign(u.a)*sign(u.b), i.e. particle 2's sign flipped; the
//           prediction is +a.b, the form usually plotted against the cosine.
enum class Convention { Outcomes, Alignment };

// Model prediction for the chosen convention at a given angle between the
// settings: -cos(angle) for Outcomes, +cos(angle) for Alignment.
double singlet_target(double angle_rad, Convention convention);

struct CorrelationEstimate {
  double correlation = 0.0;
  std::uint64_t n_detected = 0;
  // No coincidence survived the detection rule (possible only at tiny
  // sample sizes); correlation is NaN in that case.
  bool empty() const { return n_detected == 0; }
};

// Average product over the states where both particles are detected.
CorrelationEstimate estimate_correlation(std::span<const HiddenPairState> states,
                                         const UnitVector3& a,
                                         const UnitVector3& b,
                                         Convention convention);

// Fraction of states with both particles detected.
double estimate_detection_rate(std::span<const HiddenPairState> states,
                               const UnitVector3& a, const UnitVector3& b);

struct SweepConfig {
  std::uint64_t pairs = 1'000'000;
  std::uint64_t seed = 0;
  double beta_deg = 0.0;   // fixed setting b, equatorial plane
  double step_deg = 1.0;   // grid step for a; must divide 360
  Convention convention = Convention::Outcomes;
  bool fresh_per_angle = false;
};

struct AngleRecord {
  double angle_deg = 0.0;
  std::uint64_t n_detected = 0;
  std::uint64_t n_pairs = 0;
  double correlation = 0.0;
  double target = 0.0;
  double detection_rate = 0.0;
  double stderr_bound = 0.0;  // 1/sqrt(n_detected)
};

struct SweepResult {
  SweepConfig config;
  // One record per grid angle 0..360 inclusive; the 360 record is a copy of
  // the 0 record (except for the angle itself).
  std::vector<AngleRecord> records;

  double max_abs_deviation() const;
};

// Full angle sweep: a = (cos alpha, sin alpha, 0) over the degree grid,
// b = (cos beta, sin beta, 0) fixed. By default one hidden-state sample of
// `pairs` states is drawn up front and shared across every angle;
// fresh_per_angle draws an independent sample per angle from the same
// stream. Deterministic given the config.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace pearle
