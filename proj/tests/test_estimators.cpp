#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "estimators.hpp"
#include "model.hpp"
#include "random.hpp"

using namespace pearle;

namespace {

std::vector<HiddenPairState> states_for(std::uint64_t seed,
                                        std::uint64_t count) {
  RandomStream rng(seed);
  return sample_states(rng, count);
}

}  // namespace

TEST_CASE("singlet_target by convention") {
  CHECK(singlet_target(0.0, Convention::Outcomes) == -1.0);
  CHECK(singlet_target(0.0, Convention::Alignment) == 1.0);
  CHECK(std::abs(singlet_target(kPi / 2.0, Convention::Outcomes)) < 1e-15);
  CHECK(std::abs(singlet_target(kPi / 2.0, Convention::Alignment)) < 1e-15);
  CHECK(singlet_target(kPi / 3.0, Convention::Alignment) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("equal settings give exact anticorrelation of outcomes") {
  const auto states = states_for(41, 10000);
  const UnitVector3 a{0.28, 0.96, 0.0};
  const CorrelationEstimate outcomes =
      estimate_correlation(states, a, a, Convention::Outcomes);
  CHECK(outcomes.n_detected > 0);
  CHECK(outcomes.correlation == -1.0);
  const CorrelationEstimate alignment =
      estimate_correlation(states, a, a, Convention::Alignment);
  CHECK(alignment.correlation == 1.0);
}

TEST_CASE("orthogonal settings give near-zero correlation") {
  const auto states = states_for(42, 1000000);
  const UnitVector3 a{1.0, 0.0, 0.0};
  const UnitVector3 b{0.0, 1.0, 0.0};
  const CorrelationEstimate estimate =
      estimate_correlation(states, a, b, Convention::Outcomes);
  CHECK(std::abs(estimate.correlation) <= 0.005);
}

TEST_CASE("45 degree settings track the cosine in alignment convention") {
  const auto states = states_for(43, 1000000);
  const UnitVector3 a{1.0, 0.0, 0.0};
  const UnitVector3 b = equatorial_direction(kPi / 4.0);
  const CorrelationEstimate estimate =
      estimate_correlation(states, a, b, Convention::Alignment);
  CHECK(std::abs(estimate.correlation - std::cos(kPi / 4.0)) <= 0.005);
}

TEST_CASE("conventions are exact sign flips of each other") {
  const auto states = states_for(44, 200000);
  for (double angle_deg : {17.0, 61.0, 140.0, 303.0}) {
    const UnitVector3 a = equatorial_direction(angle_deg * kPi / 180.0);
    const UnitVector3 b{1.0, 0.0, 0.0};
    const CorrelationEstimate outcomes =
        estimate_correlation(states, a, b, Convention::Outcomes);
    const CorrelationEstimate alignment =
        estimate_correlation(states, a, b, Convention::Alignment);
    CHECK(outcomes.n_detected == alignment.n_detected);
    CHECK(outcomes.correlation == -alignment.correlation);
  }
}

TEST_CASE("flipping b reflects the estimate exactly") {
  const auto states = states_for(45, 200000);
  const UnitVector3 b{1.0, 0.0, 0.0};
  for (double angle_deg : {0.0, 30.0, 75.0, 120.0}) {
    const UnitVector3 a = equatorial_direction(angle_deg * kPi / 180.0);
    const CorrelationEstimate direct =
        estimate_correlation(states, a, b, Convention::Outcomes);
    const CorrelationEstimate flipped =
        estimate_correlation(states, a, -b, Convention::Outcomes);
    CHECK(direct.n_detected == flipped.n_detected);
    CHECK(direct.correlation == -flipped.correlation);
    CHECK(estimate_detection_rate(states, a, b) ==
          estimate_detection_rate(states, a, -b));
  }
}

TEST_CASE("no coincidence yields a flagged empty estimate") {
  // u along z, settings in the plane: both projections are 0 < s.
  std::vector<HiddenPairState> states{{UnitVector3{0.0, 0.0, 1.0}, 0.9}};
  const UnitVector3 a{1.0, 0.0, 0.0};
  const UnitVector3 b{0.0, 1.0, 0.0};
  const CorrelationEstimate estimate =
      estimate_correlation(states, a, b, Convention::Outcomes);
  CHECK(estimate.empty());
  CHECK(estimate.n_detected == 0);
  CHECK(std::isnan(estimate.correlation));
  CHECK(estimate_detection_rate(states, a, b) == 0.0);
  CHECK_THROWS_AS(estimate_correlation({}, a, b, Convention::Outcomes),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_detection_rate({}, a, b), std::invalid_argument);
}

TEST_CASE("pair detection rates at the reference angles") {
  const auto states = states_for(46, 1000000);
  const UnitVector3 b{1.0, 0.0, 0.0};
  const double rate0 = estimate_detection_rate(states, b, b);
  CHECK(std::abs(rate0 - 2.0 / 3.0) <= 0.005);
  const double rate90 = estimate_detection_rate(
      states, UnitVector3{0.0, 1.0, 0.0}, b);
  CHECK(std::abs(rate90 - (4.0 / 3.0) * (1.0 - 2.0 / kPi)) <= 0.005);
  // 180 degrees re-uses the same magnitudes pointwise.
  CHECK(estimate_detection_rate(states, -b, b) == rate0);
}

TEST_CASE("estimates agree with the per-pair measurement rule") {
  const auto states = states_for(47, 20000);
  const UnitVector3 a = equatorial_direction(0.4);
  const UnitVector3 b = equatorial_direction(1.9);
  std::int64_t sum = 0;
  std::uint64_t coincidences = 0;
  for (const HiddenPairState& state : states) {
    const PairResult result = measure_pair(state, a, b);
    const int product =
        outcome_value(result.first) * outcome_value(result.second);
    if (result.first != Outcome::NoDetection &&
        result.second != Outcome::NoDetection) {
      sum += product;
      ++coincidences;
    }
  }
  const CorrelationEstimate estimate =
      estimate_correlation(states, a, b, Convention::Outcomes);
  CHECK(estimate.n_detected == coincidences);
  CHECK(estimate.correlation ==
        static_cast<double>(sum) / static_cast<double>(coincidences));
}

TEST_CASE("rotational invariance: equal a.b gives compatible estimates") {
  const auto states = states_for(48, 1000000);
  const double relative = 40.0 * kPi / 180.0;
  // Pair 1 in the equatorial plane; pair 2 rotated about the x axis.
  const UnitVector3 a1{1.0, 0.0, 0.0};
  const UnitVector3 b1 = equatorial_direction(relative);
  const UnitVector3 a2{1.0, 0.0, 0.0};
  const UnitVector3 b2{std::cos(relative),
                       std::sin(relative) * std::cos(kPi / 6.0),
                       std::sin(relative) * std::sin(kPi / 6.0)};
  REQUIRE(std::abs(dot(a2, b2) - dot(a1, b1)) < 1e-12);
  const CorrelationEstimate e1 =
      estimate_correlation(states, a1, b1, Convention::Outcomes);
  const CorrelationEstimate e2 =
      estimate_correlation(states, a2, b2, Convention::Outcomes);
  const double combined =
      std::sqrt(1.0 / static_cast<double>(e1.n_detected) +
                1.0 / static_cast<double>(e2.n_detected));
  CHECK(std::abs(e1.correlation - e2.correlation) <= 3.0 * combined);
}

TEST_CASE("run_sweep validates its configuration") {
  SweepConfig config;
  config.pairs = 0;
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
  config.pairs = 10;
  config.step_deg = 7.0;  // does not divide 360
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
  config.step_deg = 0.0;
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
  config.step_deg = -90.0;
  CHECK_THROWS_AS(run_sweep(config), std::invalid_argument);
}

TEST_CASE("run_sweep covers the grid and copies the wrap-around record") {
  SweepConfig config;
  config.pairs = 10000;
  config.seed = 9;
  config.step_deg = 90.0;
  config.convention = Convention::Alignment;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.records.size() == 5);
  CHECK(result.records[0].angle_deg == 0.0);
  CHECK(result.records[1].angle_deg == 90.0);
  CHECK(result.records[4].angle_deg == 360.0);

  const AngleRecord& first = result.records.front();
  const AngleRecord& last = result.records.back();
  CHECK(last.n_detected == first.n_detected);
  CHECK(last.correlation == first.correlation);
  CHECK(last.target == first.target);
  CHECK(last.detection_rate == first.detection_rate);
  CHECK(last.stderr_bound == first.stderr_bound);

  for (const AngleRecord& record : result.records) {
    CHECK(record.n_pairs == config.pairs);
    CHECK(record.n_detected <= config.pairs);
    CHECK(std::abs(record.correlation) <= 1.0);
    CHECK(record.detection_rate >= 0.0);
    CHECK(record.detection_rate <= 1.0);
    CHECK(record.stderr_bound ==
          1.0 / std::sqrt(static_cast<double>(record.n_detected)));
  }
  // Alignment target is +cos(angle).
  CHECK(result.records[0].target == 1.0);
  CHECK(std::abs(result.records[1].target) < 1e-15);
  CHECK(result.records[2].target == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("run_sweep is deterministic and convention duality holds") {
  SweepConfig config;
  config.pairs = 50000;
  config.seed = 4711;
  config.step_deg = 30.0;
  config.convention = Convention::Outcomes;
  const SweepResult first = run_sweep(config);
  const SweepResult second = run_sweep(config);
  REQUIRE(first.records.size() == second.records.size());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(first.records[i].correlation == second.records[i].correlation);
    CHECK(first.records[i].n_detected == second.records[i].n_detected);
  }

  config.convention = Convention::Alignment;
  const SweepResult alignment = run_sweep(config);
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(first.records[i].correlation ==
          -alignment.records[i].correlation);
    CHECK(first.records[i].target == -alignment.records[i].target);
    CHECK(first.records[i].detection_rate ==
          alignment.records[i].detection_rate);
  }
}

TEST_CASE("fresh samples per angle change the records but stay seeded") {
  SweepConfig config;
  config.pairs = 20000;
  config.seed = 80;
  config.step_deg = 120.0;
  const SweepResult shared = run_sweep(config);
  config.fresh_per_angle = true;
  const SweepResult fresh1 = run_sweep(config);
  const SweepResult fresh2 = run_sweep(config);
  CHECK(fresh1.records[1].correlation == fresh2.records[1].correlation);
  // Shared sample: angle 0 uses the same states as the fresh run's angle 0,
  // later angles do not.
  CHECK(shared.records[0].correlation == fresh1.records[0].correlation);
  CHECK(shared.records[1].n_detected != fresh1.records[1].n_detected);
}

TEST_CASE("beta offsets the target column") {
  SweepConfig config;
  config.pairs = 5000;
  config.seed = 3;
  config.step_deg = 90.0;
  config.beta_deg = 90.0;
  config.convention = Convention::Alignment;
  const SweepResult result = run_sweep(config);
  CHECK(std::abs(result.records[0].target) < 1e-15);  // cos(-90)
  CHECK(result.records[1].target == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sweep correlations stay near the model prediction") {
  SweepConfig config;
  config.pairs = 200000;
  config.seed = 9875;
  config.step_deg = 30.0;
  config.convention = Convention::Alignment;
  const SweepResult result = run_sweep(config);
  CHECK(result.max_abs_deviation() <= 0.012);
}

TEST_CASE("reported stderr bound is honest across seeds and angles") {
  int cells = 0;
  int violations = 0;
  for (std::uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
    SweepConfig config;
    config.pairs = 200000;
    config.seed = seed;
    config.step_deg = 15.0;
    config.convention = Convention::Alignment;
    const SweepResult result = run_sweep(config);
    for (std::size_t i = 0; i + 1 < result.records.size(); ++i) {
      ++cells;
      const AngleRecord& record = result.records[i];
      if (std::abs(record.correlation - record.target) >
          3.0 * record.stderr_bound) {
        ++violations;
      }
    }
  }
  CHECK(violations <= cells / 100);
}

TEST_CASE("detection rates stay within the model's extreme values") {
  SweepConfig config;
  config.pairs = 100000;
  config.seed = 64;
  config.step_deg = 5.0;
  const SweepResult result = run_sweep(config);
  for (const AngleRecord& record : result.records) {
    CHECK(record.detection_rate >= (4.0 / 3.0) * (1.0 - 2.0 / kPi) - 0.01);
    CHECK(record.detection_rate <= 2.0 / 3.0 + 0.01);
  }
}
