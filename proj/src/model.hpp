#pragma once

#include <cstdint>
#include <vector>

#include "random.hpp"

namespace pearle {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// A point on the unit sphere S^2: the spin direction of particle 1 (particle
// 2 carries the opposite direction) or a measurement setting.
struct UnitVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

inline double dot(const UnitVector3& a, const UnitVector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline UnitVector3 operator-(const UnitVector3& v) {
  return UnitVector3{-v.x, -v.y, -v.z};
}

double norm(const UnitVector3& v);

// Setting (cos a, sin a, 0) in the equatorial plane, angle in radians.
UnitVector3 equatorial_direction(double angle_rad);

// The hidden variable carried by a particle pair: spin direction u of
// particle 1 (particle 2 carries -u) and the shared detection threshold
// s in [0, 1]. A particle is detected iff the magnitude of the projection
// of its spin direction onto the measurement axis reaches s.
struct HiddenPairState {
  UnitVector3 u;
  double s = 0.0;
};

enum class Outcome { Up, Down, NoDetection };

// +1 for Up, -1 for Down, 0 for NoDetection.
inline int outcome_value(Outcome o) {
  switch (o) {
    case Outcome::Up:
      return 1;
    case Outcome::Down:
      return -1;
    default:
      return 0;
  }
}

struct PairResult {
  Outcome first = Outcome::NoDetection;
  Outcome second = Outcome::NoDetection;
};

// Deterministic part of the sphere sampler: map (z, theta) to
// (sqrt(1-z^2) cos theta, sqrt(1-z^2) sin theta, z).
UnitVector3 sphere_point(double z, double theta);

// Uniform point on S^2 via the trig method: the z coordinate of a uniform
// point on the sphere is itself uniform on [-1, 1]. Draw order is fixed:
// Z ~ Unif(-1,1) first, then Theta ~ Unif(0, 2*pi).
UnitVector3 sample_unit_sphere(RandomStream& rng);

// Inverse-transform map behind the threshold law: s = 2/sqrt(v) - 1, taking
// Unif(1, 4) to the density (8/3)(1+s)^-3 on [0, 1].
double threshold_from_v(double v);

// Detection threshold S = threshold_from_v(V) with V ~ Unif(1, 4). One draw.
double sample_threshold(RandomStream& rng);

// Direction first, then threshold, from the same stream (three draws total:
// z, theta, v). Given a seed the resulting state sequence is fixed.
HiddenPairState sample_pair_state(RandomStream& rng);

// Convenience: materialize `count` states from the stream.
std::vector<HiddenPairState> sample_states(RandomStream& rng,
                                           std::uint64_t count);

// Amplitude r = arccos(s)/(pi/2), the inverse of s = cos(r*pi/2).
// Throws std::domain_error unless 0 <= s <= 1.
double threshold_to_amplitude(double s);

// Measurement rule for particle 1 with setting a: let A = u.a. Detected iff
// |A| >= s (ties count as detected); the outcome is sign(A), with
// sign(0) = Up.
Outcome measure_first(const HiddenPairState& state, const UnitVector3& a);

// Particle 2 carries -u, so B = -u.b; otherwise the same rule as particle 1.
Outcome measure_second(const HiddenPairState& state, const UnitVector3& b);

PairResult measure_pair(const HiddenPairState& state, const UnitVector3& a,
                        const UnitVector3& b);

}  // namespace pearle
