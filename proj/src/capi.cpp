#include "pearle/pearle.h"

#include <cmath>
#include <cstring>
#include <new>
#include <span>
#include <stdexcept>
#include <vector>

#include "appendix.hpp"
#include "caricature.hpp"
#include "densities.hpp"
#include "estimators.hpp"
#include "model.hpp"
#include "random.hpp"
#include "summation.hpp"

// Opaque handle definitions. Each wraps an immutable core object; the C
// surface never exposes C++ types or exceptions.
struct pearle_rng {
  pearle::RandomStream stream;
};

struct pearle_sweep_result {
  pearle::SweepResult result;
};

struct pearle_appendix_result {
  std::vector<double> s;
  std::vector<double> h;
  std::vector<double> reference;
  pearle::PositivitySummary summary;
};

namespace {

// Translate any exception escaping the core into a status code.
template <typename Fn>
pearle_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::bad_alloc&) {
    return PEARLE_ERROR_OUT_OF_MEMORY;
  } catch (const std::domain_error&) {
    return PEARLE_ERROR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return PEARLE_ERROR_INVALID_CONFIG;
  } catch (...) {
    return PEARLE_ERROR_INTERNAL;
  }
}

pearle_status scalar_map(double x, double* out, double (*fn)(double)) {
  if (out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  return guarded([&] {
    *out = fn(x);
    return PEARLE_OK;
  });
}

pearle::UnitVector3 to_vector(const double axis[3]) {
  return pearle::UnitVector3{axis[0], axis[1], axis[2]};
}

std::span<const pearle::HiddenPairState> to_states(const double* states,
                                                   uint64_t count) {
  static_assert(sizeof(pearle::HiddenPairState) == 4 * sizeof(double));
  return {reinterpret_cast<const pearle::HiddenPairState*>(states),
          static_cast<std::size_t>(count)};
}

pearle_status convention_from(int value, pearle::Convention* out) {
  switch (value) {
    case PEARLE_CONVENTION_OUTCOMES:
      *out = pearle::Convention::Outcomes;
      return PEARLE_OK;
    case PEARLE_CONVENTION_ALIGNMENT:
      *out = pearle::Convention::Alignment;
      return PEARLE_OK;
    default:
      return PEARLE_ERROR_INVALID_CONFIG;
  }
}

}  // namespace

extern "C" {

const char* pearle_version(void) { return "1.0.0"; }

const char* pearle_status_message(pearle_status status) {
  switch (status) {
    case PEARLE_OK:
      return "ok";
    case PEARLE_ERROR_NULL_POINTER:
      return "null pointer argument";
    case PEARLE_ERROR_DOMAIN:
      return "argument outside its domain";
    case PEARLE_ERROR_INVALID_CONFIG:
      return "invalid configuration";
    case PEARLE_ERROR_OUT_OF_MEMORY:
      return "out of memory";
    default:
      return "internal error";
  }
}

pearle_status pearle_r_density(double r, double* out) {
  return scalar_map(r, out, pearle::r_density);
}

pearle_status pearle_r_cdf(double r, double* out) {
  return scalar_map(r, out, pearle::r_cdf);
}

pearle_status pearle_s_density(double s, double* out) {
  return scalar_map(s, out, pearle::s_density);
}

pearle_status pearle_s_cdf(double s, double* out) {
  return scalar_map(s, out, pearle::s_cdf);
}

double pearle_uniform_ball_density(double r) {
  return pearle::uniform_ball_density(r);
}

double pearle_combined_formula_density(double r) {
  return pearle::pearle_combined_density(r);
}

pearle_status pearle_threshold_to_amplitude(double s, double* out) {
  return scalar_map(s, out, pearle::threshold_to_amplitude);
}

pearle_status pearle_riemann_bounds(int64_t n_intervals, double* lower,
                                    double* upper) {
  if (lower == nullptr || upper == nullptr) return PEARLE_ERROR_NULL_POINTER;
  return guarded([&] {
    const pearle::RiemannBounds bounds = pearle::riemann_bounds(n_intervals);
    *lower = bounds.lower;
    *upper = bounds.upper;
    return PEARLE_OK;
  });
}

pearle_status pearle_combined_formula_integral(int64_t n_intervals,
                                               double* out) {
  if (out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  return guarded([&] {
    *out = pearle::pearle_combined_integral(n_intervals);
    return PEARLE_OK;
  });
}

pearle_rng* pearle_rng_create(uint64_t seed) {
  return new (std::nothrow) pearle_rng{pearle::RandomStream(seed)};
}

pearle_rng* pearle_rng_substream(uint64_t seed, uint64_t worker_index) {
  return new (std::nothrow)
      pearle_rng{pearle::RandomStream::substream(seed, worker_index)};
}

void pearle_rng_destroy(pearle_rng* rng) { delete rng; }

pearle_status pearle_sample_direction(pearle_rng* rng, double out_xyz[3]) {
  if (rng == nullptr || out_xyz == nullptr) return PEARLE_ERROR_NULL_POINTER;
  const pearle::UnitVector3 u = pearle::sample_unit_sphere(rng->stream);
  out_xyz[0] = u.x;
  out_xyz[1] = u.y;
  out_xyz[2] = u.z;
  return PEARLE_OK;
}

pearle_status pearle_sample_threshold(pearle_rng* rng, double* out_s) {
  if (rng == nullptr || out_s == nullptr) return PEARLE_ERROR_NULL_POINTER;
  *out_s = pearle::sample_threshold(rng->stream);
  return PEARLE_OK;
}

pearle_status pearle_sample_pair_states(pearle_rng* rng, uint64_t count,
                                        double* out_states) {
  if (rng == nullptr || out_states == nullptr) {
    return PEARLE_ERROR_NULL_POINTER;
  }
  for (uint64_t i = 0; i < count; ++i) {
    const pearle::HiddenPairState state =
        pearle::sample_pair_state(rng->stream);
    out_states[4 * i + 0] = state.u.x;
    out_states[4 * i + 1] = state.u.y;
    out_states[4 * i + 2] = state.u.z;
    out_states[4 * i + 3] = state.s;
  }
  return PEARLE_OK;
}

pearle_status pearle_measure(const double state[4], const double axis[3],
                             int particle, int* out) {
  if (state == nullptr || axis == nullptr || out == nullptr) {
    return PEARLE_ERROR_NULL_POINTER;
  }
  if (particle != 1 && particle != 2) return PEARLE_ERROR_INVALID_CONFIG;
  const pearle::HiddenPairState hidden{
      pearle::UnitVector3{state[0], state[1], state[2]}, state[3]};
  const pearle::Outcome outcome =
      particle == 1 ? pearle::measure_first(hidden, to_vector(axis))
                    : pearle::measure_second(hidden, to_vector(axis));
  *out = pearle::outcome_value(outcome);
  return PEARLE_OK;
}

pearle_status pearle_singlet_target(double angle_rad, int convention,
                                    double* out) {
  if (out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  pearle::Convention conv;
  const pearle_status status = convention_from(convention, &conv);
  if (status != PEARLE_OK) return status;
  *out = pearle::singlet_target(angle_rad, conv);
  return PEARLE_OK;
}

pearle_status pearle_estimate_correlation(const double* states,
                                          uint64_t count, const double a[3],
                                          const double b[3], int convention,
                                          double* correlation,
                                          uint64_t* n_detected) {
  if (states == nullptr || a == nullptr || b == nullptr ||
      correlation == nullptr || n_detected == nullptr) {
    return PEARLE_ERROR_NULL_POINTER;
  }
  pearle::Convention conv;
  const pearle_status status = convention_from(convention, &conv);
  if (status != PEARLE_OK) return status;
  return guarded([&] {
    const pearle::CorrelationEstimate estimate = pearle::estimate_correlation(
        to_states(states, count), to_vector(a), to_vector(b), conv);
    *correlation = estimate.correlation;
    *n_detected = estimate.n_detected;
    return PEARLE_OK;
  });
}

pearle_status pearle_estimate_detection_rate(const double* states,
                                             uint64_t count,
                                             const double a[3],
                                             const double b[3],
                                             double* rate) {
  if (states == nullptr || a == nullptr || b == nullptr || rate == nullptr) {
    return PEARLE_ERROR_NULL_POINTER;
  }
  return guarded([&] {
    *rate = pearle::estimate_detection_rate(to_states(states, count),
                                            to_vector(a), to_vector(b));
    return PEARLE_OK;
  });
}

pearle_status pearle_sweep_run(const pearle_sweep_config* config,
                               pearle_sweep_result** out) {
  if (config == nullptr || out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  *out = nullptr;
  pearle::SweepConfig core;
  core.pairs = config->pairs;
  core.seed = config->seed;
  core.beta_deg = config->beta_deg;
  core.step_deg = config->step_deg;
  core.fresh_per_angle = config->fresh_per_angle != 0;
  const pearle_status status =
      convention_from(config->convention, &core.convention);
  if (status != PEARLE_OK) return status;
  return guarded([&] {
    auto result = new pearle_sweep_result{pearle::run_sweep(core)};
    *out = result;
    return PEARLE_OK;
  });
}

size_t pearle_sweep_record_count(const pearle_sweep_result* result) {
  return result == nullptr ? 0 : result->result.records.size();
}

pearle_status pearle_sweep_record(const pearle_sweep_result* result,
                                  size_t index, pearle_angle_record* out) {
  if (result == nullptr || out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  if (index >= result->result.records.size()) {
    return PEARLE_ERROR_INVALID_CONFIG;
  }
  const pearle::AngleRecord& record = result->result.records[index];
  out->angle_deg = record.angle_deg;
  out->n_detected = record.n_detected;
  out->n_pairs = record.n_pairs;
  out->correlation = record.correlation;
  out->target = record.target;
  out->detection_rate = record.detection_rate;
  out->stderr_bound = record.stderr_bound;
  return PEARLE_OK;
}

double pearle_sweep_max_deviation(const pearle_sweep_result* result) {
  return result == nullptr ? 0.0 : result->result.max_abs_deviation();
}

void pearle_sweep_destroy(pearle_sweep_result* result) { delete result; }

pearle_status pearle_appendix_run(int mu_choice, int64_t grid_points,
                                  int64_t trim,
                                  pearle_appendix_result** out) {
  if (out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  *out = nullptr;
  pearle::MuSpec spec;
  switch (mu_choice) {
    case PEARLE_MU_CONSTANT:
      spec = pearle::MuSpec::constant();
      break;
    case PEARLE_MU_G_CONSTANT:
      spec = pearle::MuSpec::g_constant();
      break;
    default:
      return PEARLE_ERROR_INVALID_CONFIG;
  }
  return guarded([&] {
    const pearle::Grid grid = pearle::Grid::make(grid_points);
    const pearle::GridFunction h =
        pearle::candidate_density(spec, grid, trim);

    auto result = new pearle_appendix_result;
    result->s = h.grid.points;
    result->h = h.values;
    result->summary = pearle::assess_positivity(h);
    result->reference.reserve(h.values.size());
    pearle::CompensatedSum mean;
    for (double s : result->s) {
      const double v = pearle::s_density(s);
      result->reference.push_back(v);
      mean.add(v);
    }
    const double scale =
        mean.value() / static_cast<double>(result->reference.size());
    for (double& v : result->reference) v /= scale;
    *out = result;
    return PEARLE_OK;
  });
}

size_t pearle_appendix_point_count(const pearle_appendix_result* result) {
  return result == nullptr ? 0 : result->s.size();
}

pearle_status pearle_appendix_point(const pearle_appendix_result* result,
                                    size_t index, double* s,
                                    double* h_normalized, double* reference) {
  if (result == nullptr) return PEARLE_ERROR_NULL_POINTER;
  if (index >= result->s.size()) return PEARLE_ERROR_INVALID_CONFIG;
  if (s != nullptr) *s = result->s[index];
  if (h_normalized != nullptr) *h_normalized = result->h[index];
  if (reference != nullptr) *reference = result->reference[index];
  return PEARLE_OK;
}

pearle_status pearle_appendix_positivity(const pearle_appendix_result* result,
                                         double* min, double* max,
                                         int* has_negative,
                                         double* negative_fraction) {
  if (result == nullptr) return PEARLE_ERROR_NULL_POINTER;
  if (min != nullptr) *min = result->summary.min;
  if (max != nullptr) *max = result->summary.max;
  if (has_negative != nullptr) {
    *has_negative = result->summary.has_negative ? 1 : 0;
  }
  if (negative_fraction != nullptr) {
    *negative_fraction = result->summary.negative_fraction;
  }
  return PEARLE_OK;
}

void pearle_appendix_destroy(pearle_appendix_result* result) { delete result; }

pearle_status pearle_caricature_sample(uint64_t n_points, uint64_t seed,
                                       pearle_caricature_point* out) {
  if (out == nullptr) return PEARLE_ERROR_NULL_POINTER;
  return guarded([&] {
    pearle::RandomStream rng(seed);
    const std::vector<pearle::CaricaturePoint> points =
        pearle::sample_caricature(n_points, rng);
    for (std::size_t i = 0; i < points.size(); ++i) {
      out[i].x = points[i].x;
      out[i].y = points[i].y;
      switch (points[i].cls) {
        case pearle::PointClass::Up:
          out[i].outcome = 1;
          break;
        case pearle::PointClass::Down:
          out[i].outcome = -1;
          break;
        default:
          out[i].outcome = 0;
      }
    }
    return PEARLE_OK;
  });
}

}  // extern "C"
