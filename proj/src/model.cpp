#include "model.hpp"

#include <cmath>
#include <stdexcept>

namespace pearle {

double norm(const UnitVector3& v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

UnitVector3 equatorial_direction(double angle_rad) {
  return UnitVector3{std::cos(angle_rad), std::sin(angle_rad), 0.0};
}

UnitVector3 sphere_point(double z, double theta) {
  const double rho = std::sqrt(1.0 - z * z);
  return UnitVector3{rho * std::cos(theta), rho * std::sin(theta), z};
}

UnitVector3 sample_unit_sphere(RandomStream& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double theta = rng.uniform(0.0, 2.0 * kPi);
  return sphere_point(z, theta);
}

double threshold_from_v(double v) { return 2.0 / std::sqrt(v) - 1.0; }

double sample_threshold(RandomStream& rng) {
  return threshold_from_v(rng.uniform(1.0, 4.0));
}

HiddenPairState sample_pair_state(RandomStream& rng) {
  HiddenPairState state;
  state.u = sample_unit_sphere(rng);
  state.s = sample_threshold(rng);
  return state;
}

std::vector<HiddenPairState> sample_states(RandomStream& rng,
                                           std::uint64_t count) {
  std::vector<HiddenPairState> states;
  states.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    states.push_back(sample_pair_state(rng));
  }
  return states;
}

double threshold_to_amplitude(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("threshold_to_amplitude: s must be in [0, 1]");
  }
  return std::acos(s) / (kPi / 2.0);
}

namespace {

inline Outcome apply_rule(double projection, double threshold) {
  if (std::abs(projection) < threshold) {
    return Outcome::NoDetection;
  }
  return projection >= 0.0 ? Outcome::Up : Outcome::Down;
}

}  // namespace

Outcome measure_first(const HiddenPairState& state, const UnitVector3& a) {
  return apply_rule(dot(state.u, a), state.s);
}

Outcome measure_second(const HiddenPairState& state, const UnitVector3& b) {
  return apply_rule(-dot(state.u, b), state.s);
}

PairResult measure_pair(const HiddenPairState& state, const UnitVector3& a,
                        const UnitVector3& b) {
  return PairResult{measure_first(state, a), measure_second(state, b)};
}

}  // namespace pearle
