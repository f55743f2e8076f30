#include <doctest.h>

#include <cmath>

#include "caricature.hpp"
#include "model.hpp"
#include "random.hpp"

using namespace pearle;

TEST_CASE("points on the measurement axis are detected as Up") {
  // Any s < 1 gives r > 0, so deviation 0 beats the r*pi/2 cutoff.
  for (double s : {0.0, 0.3, 0.9, 0.999}) {
    CHECK(make_caricature_point(0.0, s).cls == PointClass::Up);
  }
  // Theta = pi lands on the opposite axis: Down.
  CHECK(make_caricature_point(kPi, 0.5).cls == PointClass::Down);
}

TEST_CASE("points on the equator are never detected") {
  // Deviation pi/2 requires r > 1, which the radial law cannot produce.
  for (double s : {0.0, 0.2, 0.7}) {
    CHECK(make_caricature_point(kPi / 2.0, s).cls == PointClass::Undetected);
    CHECK(make_caricature_point(3.0 * kPi / 2.0, s).cls ==
          PointClass::Undetected);
  }
}

TEST_CASE("point radius follows the amplitude law") {
  for (double s : {0.05, 0.4, 0.8}) {
    const CaricaturePoint point = make_caricature_point(1.1, s);
    const double radius = std::hypot(point.x, point.y);
    CHECK(radius == doctest::Approx(threshold_to_amplitude(s)).epsilon(1e-12));
  }
}

TEST_CASE("detection boundary is strict") {
  // Choose s so that r = 0.5; the detection cone half-angle is r*pi/2.
  const double s = std::cos(0.25 * kPi);
  const double r = threshold_to_amplitude(s);
  CHECK(r == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(make_caricature_point(r * kPi / 2.0 - 1e-9, s).cls == PointClass::Up);
  CHECK(make_caricature_point(r * kPi / 2.0 + 1e-9, s).cls ==
        PointClass::Undetected);
}

TEST_CASE("sampling is deterministic given the seed") {
  RandomStream rng1(1234);
  RandomStream rng2(1234);
  const auto a = sample_caricature(500, rng1);
  const auto b = sample_caricature(500, rng2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].cls == b[i].cls);
  }
}

// The 2D picture is neither a section nor a projection of the 3D model:
// its undetected fraction converges to 1 - E[R] = 1 - (4/3 - 16/(9 pi))
// = 0.2326, noticeably below the 3D model's 1/3. The exact count for this
// seed is frozen as a regression snapshot.
TEST_CASE("undetected fraction snapshot at seed 1234") {
  RandomStream rng(1234);
  const auto points = sample_caricature(100000, rng);
  std::uint64_t undetected = 0;
  for (const CaricaturePoint& point : points) {
    if (point.cls == PointClass::Undetected) ++undetected;
  }
  const double fraction = static_cast<double>(undetected) / 100000.0;
  const double expected = 1.0 - (4.0 / 3.0 - 16.0 / (9.0 * kPi));
  CHECK(std::abs(fraction - expected) < 0.005);
  CHECK(fraction < 1.0 / 3.0 - 0.05);
  CHECK(undetected == 23422);  // frozen snapshot, see note above
}
