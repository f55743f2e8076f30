/*
 * pearle -- C interface to the Pearle detection-loophole model library.
 *
 * A local hidden-variable model of the singlet correlations: each particle
 * pair carries a uniform spin direction U on the sphere and a detection
 * threshold S = 2/sqrt(V) - 1, V ~ Unif(1, 4). A particle is detected iff
 * the magnitude of the projection of its spin axis onto the measurement
 * axis reaches S; detected outcomes are the projection signs. Averaged over
 * detected coincidences the outcome product reproduces -a.b.
 *
 * All functions are thread-safe except that a pearle_rng must not be shared
 * between threads; opaque results are immutable after creation. Functions
 * returning pearle_status never throw and never crash on NULL arguments.
 */

#ifndef PEARLE_H
#define PEARLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pearle_status {
  PEARLE_OK = 0,
  PEARLE_ERROR_NULL_POINTER = 1,
  PEARLE_ERROR_DOMAIN = 2,        /* scalar argument outside its domain */
  PEARLE_ERROR_INVALID_CONFIG = 3,
  PEARLE_ERROR_OUT_OF_MEMORY = 4,
  PEARLE_ERROR_INTERNAL = 5
} pearle_status;

const char *pearle_version(void);
const char *pearle_status_message(pearle_status status);

/* ------------------------------------------------------------------ */
/* Closed-form densities and grid checks                               */
/* ------------------------------------------------------------------ */

/* f_R(r) = (4 pi / 3) sin(r pi/2) / (1 + cos(r pi/2))^3 on [0, 1]. */
pearle_status pearle_r_density(double r, double *out);

/* Pr(R <= r) = (1/3) (4 / (1 + cos(r pi/2))^2 - 1) on [0, 1]. */
pearle_status pearle_r_cdf(double r, double *out);

/* f_S(s) = (8/3) (1 + s)^-3 on [0, 1]. */
pearle_status pearle_s_density(double s, double *out);

/* Pr(S <= s) = (4/3) (1 - (1 + s)^-2) on [0, 1]. */
pearle_status pearle_s_cdf(double s, double *out);

/* 3 r^2, the radial density of a uniform ball. */
double pearle_uniform_ball_density(double r);

/* Pearle's mis-normalized formulas (1)+(22): (16/3) sin(..)/(1+cos(..))^3;
 * integrates to 4/pi, not 1. */
double pearle_combined_formula_density(double r);

/* r = arccos(s) / (pi/2) on [0, 1]. */
pearle_status pearle_threshold_to_amplitude(double s, double *out);

/* Guaranteed Riemann bracketing of the integral of f_R over [0, 1] on a
 * regular grid with n_intervals intervals: lower <= 1 <= upper. */
pearle_status pearle_riemann_bounds(int64_t n_intervals, double *lower,
                                    double *upper);

/* Trapezoid integral of the combined formula on the same grid (-> 4/pi). */
pearle_status pearle_combined_formula_integral(int64_t n_intervals,
                                               double *out);

/* ------------------------------------------------------------------ */
/* Seeded sampling and measurement                                     */
/* ------------------------------------------------------------------ */

/* Deterministic random stream; same seed, same sequence on any platform. */
typedef struct pearle_rng pearle_rng;

pearle_rng *pearle_rng_create(uint64_t seed);

/* Independent stream for parallel worker `worker_index` derived from the
 * master seed (fixed splitting rule documented in the library). */
pearle_rng *pearle_rng_substream(uint64_t seed, uint64_t worker_index);

void pearle_rng_destroy(pearle_rng *rng);

/* Uniform point on the unit sphere; writes x, y, z. */
pearle_status pearle_sample_direction(pearle_rng *rng, double out_xyz[3]);

/* Detection threshold S = 2/sqrt(V) - 1, V ~ Unif(1, 4). */
pearle_status pearle_sample_threshold(pearle_rng *rng, double *out_s);

/* `count` hidden pair states, each 4 doubles (ux, uy, uz, s), written
 * contiguously to out_states (capacity 4 * count). Per state the direction
 * is drawn first, then the threshold. */
pearle_status pearle_sample_pair_states(pearle_rng *rng, uint64_t count,
                                        double *out_states);

/* Measure one particle of the pair along `axis`. particle is 1 or 2
 * (particle 2 carries the opposite spin direction). *out is +1 (spin up),
 * -1 (spin down) or 0 (no detection). */
pearle_status pearle_measure(const double state[4], const double axis[3],
                             int particle, int *out);

/* ------------------------------------------------------------------ */
/* Estimation over detected coincidences                               */
/* ------------------------------------------------------------------ */

typedef enum pearle_convention {
  /* Mean of the physical outcome products sign(A) sign(B); target -a.b. */
  PEARLE_CONVENTION_OUTCOMES = 0,
  /* Mean of sign(U.a) sign(U.b); target +a.b (the cosine-tracking form). */
  PEARLE_CONVENTION_ALIGNMENT = 1
} pearle_convention;

/* -cos(angle) for Outcomes, +cos(angle) for Alignment. */
pearle_status pearle_singlet_target(double angle_rad, int convention,
                                    double *out);

/* Correlation over the states (layout as produced by
 * pearle_sample_pair_states) where both particles are detected. If no
 * state yields a coincidence, *n_detected is 0 and *correlation is NaN. */
pearle_status pearle_estimate_correlation(const double *states,
                                          uint64_t count, const double a[3],
                                          const double b[3], int convention,
                                          double *correlation,
                                          uint64_t *n_detected);

/* Fraction of states with both particles detected. */
pearle_status pearle_estimate_detection_rate(const double *states,
                                             uint64_t count,
                                             const double a[3],
                                             const double b[3],
                                             double *rate);

/* ------------------------------------------------------------------ */
/* Angle sweep                                                         */
/* ------------------------------------------------------------------ */

typedef struct pearle_sweep_config {
  uint64_t pairs;       /* number of hidden states (M) */
  uint64_t seed;
  double beta_deg;      /* fixed setting b, equatorial plane */
  double step_deg;      /* grid step for a; must divide 360 */
  int convention;       /* pearle_convention */
  int fresh_per_angle;  /* 0: one shared sample; 1: fresh sample per angle */
} pearle_sweep_config;

typedef struct pearle_angle_record {
  double angle_deg;
  uint64_t n_detected;
  uint64_t n_pairs;
  double correlation;
  double target;
  double detection_rate;
  double stderr_bound;  /* 1/sqrt(n_detected) */
} pearle_angle_record;

typedef struct pearle_sweep_result pearle_sweep_result;

/* Run the sweep over grid angles 0..360 inclusive (the 360 record is a
 * copy of the 0 record). Deterministic given the config. */
pearle_status pearle_sweep_run(const pearle_sweep_config *config,
                               pearle_sweep_result **out);

size_t pearle_sweep_record_count(const pearle_sweep_result *result);

pearle_status pearle_sweep_record(const pearle_sweep_result *result,
                                  size_t index, pearle_angle_record *out);

/* max over records of |correlation - target|. */
double pearle_sweep_max_deviation(const pearle_sweep_result *result);

void pearle_sweep_destroy(pearle_sweep_result *result);

/* ------------------------------------------------------------------ */
/* Candidate threshold densities (grid operator)                       */
/* ------------------------------------------------------------------ */

typedef enum pearle_mu_choice {
  PEARLE_MU_CONSTANT = 0,   /* mu = 1: recovers f_S about (1+s)^-3 */
  PEARLE_MU_G_CONSTANT = 1  /* mu from a constant pair-detection rate */
} pearle_mu_choice;

typedef struct pearle_appendix_result pearle_appendix_result;

/* Evaluate the candidate density generated by mu on a grid_points-point
 * grid over (0, 1), trimming `trim` unstable points at the right end
 * (grid_points >= trim + 3). The result holds the retained abscissae, the
 * mean-normalized candidate density, and the matching normalized
 * (1+s)^-3 reference curve. */
pearle_status pearle_appendix_run(int mu_choice, int64_t grid_points,
                                  int64_t trim,
                                  pearle_appendix_result **out);

size_t pearle_appendix_point_count(const pearle_appendix_result *result);

pearle_status pearle_appendix_point(const pearle_appendix_result *result,
                                    size_t index, double *s,
                                    double *h_normalized, double *reference);

pearle_status pearle_appendix_positivity(const pearle_appendix_result *result,
                                         double *min, double *max,
                                         int *has_negative,
                                         double *negative_fraction);

void pearle_appendix_destroy(pearle_appendix_result *result);

/* ------------------------------------------------------------------ */
/* 2D caricature                                                       */
/* ------------------------------------------------------------------ */

typedef struct pearle_caricature_point {
  double x;
  double y;
  int outcome;  /* +1 spin up, -1 spin down, 0 undetected */
} pearle_caricature_point;

/* Sample n_points disk points (caller provides the array). Per point the
 * polar angle is drawn first, then the threshold. */
pearle_status pearle_caricature_sample(uint64_t n_points, uint64_t seed,
                                       pearle_caricature_point *out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PEARLE_H */
