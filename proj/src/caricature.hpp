#pragma once

#include <cstdint>
#include <vector>

#include "random.hpp"

namespace pearle {

// 2D caricature of the detection geometry: particles on the unit disk with
// the radial law of the 3D model but direction uniform on the circle. It is
// neither a section nor a projection of the 3D model; it exists to make the
// mushroom-shaped detection regions around the measurement axis visible.
enum class PointClass { Up, Down, Undetected };

struct CaricaturePoint {
  double x = 0.0;
  double y = 0.0;
  PointClass cls = PointClass::Undetected;
};

// Deterministic part: place the point at radius R = arccos(s)/(pi/2) and
// polar angle theta. The point is detected iff its angular deviation from
// the nearer of the 0/pi half-axes is below R*pi/2 (strictly), with the
// class given by the hemisphere (Up around 0, Down around pi).
CaricaturePoint make_caricature_point(double theta, double s);

// Sample `count` disk points. Per point the draw order is fixed: the polar
// angle Theta ~ Unif[0, 2*pi) first, then the threshold S (one V draw).
std::vector<CaricaturePoint> sample_caricature(std::uint64_t count,
                                               RandomStream& rng);

}  // namespace pearle
