#include "caricature.hpp"

#include <cmath>

#include "model.hpp"

namespace pearle {

CaricaturePoint make_caricature_point(double theta, double s) {
  const double r = threshold_to_amplitude(s);

  // Angular deviation from the nearer of the two half-axes at 0 and pi.
  double deviation;
  bool positive_axis;
  if (theta < kPi / 2.0) {
    deviation = theta;
    positive_axis = true;
  } else if (theta > 3.0 * kPi / 2.0) {
    deviation = 2.0 * kPi - theta;
    positive_axis = true;
  } else {
    deviation = std::abs(theta - kPi);
    positive_axis = false;
  }

  CaricaturePoint point;
  point.x = r * std::cos(theta);
  point.y = r * std::sin(theta);
  if (deviation < r * kPi / 2.0) {
    point.cls = positive_axis ? PointClass::Up : PointClass::Down;
  } else {
    point.cls = PointClass::Undetected;
  }
  return point;
}

std::vector<CaricaturePoint> sample_caricature(std::uint64_t count,
                                               RandomStream& rng) {
  std::vector<CaricaturePoint> points;
  points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const double s = sample_threshold(rng);
    points.push_back(make_caricature_point(theta, s));
  }
  return points;
}

}  // namespace pearle
