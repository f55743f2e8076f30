// Command-line front end for the Pearle model library. Every subcommand
// writes plot-ready CSV (UTF-8, LF line endings, '.' decimal separator,
// header row always present) and prints a short summary to standard
// output. Output is byte-identical for identical flags and seed. Links
// only the C API.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pearle/pearle.h"

namespace {

// Fixed-format numeric field: 9 significant digits, C locale.
std::string fmt(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string fmt(std::uint64_t value) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%llu",
                static_cast<unsigned long long>(value));
  return buffer;
}

// Exits nonzero through main() when the output cannot be opened/written.
class CsvFile {
 public:
  CsvFile(const std::string& path, const std::string& header)
      : path_(path), out_(path, std::ios::binary) {
    if (out_) out_ << header << '\n';
  }

  bool ok() const { return static_cast<bool>(out_); }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

  bool close() {
    out_.flush();
    return out_.good();
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

int fail_open(const std::string& path) {
  std::fprintf(stderr, "error: --out: cannot open '%s' for writing\n",
               path.c_str());
  return 1;
}

int fail_write(const std::string& path) {
  std::fprintf(stderr, "error: --out: failed while writing '%s'\n",
               path.c_str());
  return 1;
}

int fail_status(const char* what, pearle_status status) {
  std::fprintf(stderr, "error: %s: %s\n", what,
               pearle_status_message(status));
  return 1;
}

struct SweepOptions {
  std::uint64_t pairs = 1000000;
  std::uint64_t seed = 0;
  double beta_deg = 0.0;
  double step_deg = 1.0;
  std::string convention = "outcomes";
  bool fresh_per_angle = false;
  std::string out;
};

int run_sweep(const SweepOptions& options) {
  pearle_sweep_config config{};
  config.pairs = options.pairs;
  config.seed = options.seed;
  config.beta_deg = options.beta_deg;
  config.step_deg = options.step_deg;
  config.convention = options.convention == "alignment"
                          ? PEARLE_CONVENTION_ALIGNMENT
                          : PEARLE_CONVENTION_OUTCOMES;
  config.fresh_per_angle = options.fresh_per_angle ? 1 : 0;

  pearle_sweep_result* result = nullptr;
  if (pearle_status status = pearle_sweep_run(&config, &result);
      status != PEARLE_OK) {
    return fail_status("sweep", status);
  }

  CsvFile csv(options.out,
              "angle_deg,n_detected,n_pairs,correlation,target,"
              "detection_rate,stderr_bound");
  if (!csv.ok()) {
    pearle_sweep_destroy(result);
    return fail_open(options.out);
  }
  const std::size_t count = pearle_sweep_record_count(result);
  for (std::size_t i = 0; i < count; ++i) {
    pearle_angle_record record{};
    pearle_sweep_record(result, i, &record);
    csv.row({fmt(record.angle_deg), fmt(record.n_detected),
             fmt(record.n_pairs), fmt(record.correlation), fmt(record.target),
             fmt(record.detection_rate), fmt(record.stderr_bound)});
  }
  const double max_deviation = pearle_sweep_max_deviation(result);
  pearle_sweep_destroy(result);
  if (!csv.close()) return fail_write(options.out);

  std::printf("max_abs_deviation = %s\n", fmt(max_deviation).c_str());
  return 0;
}

struct DensityOptions {
  std::int64_t grid_intervals = 1000;
  std::string out;
};

int run_density(const DensityOptions& options) {
  double lower = 0.0;
  double upper = 0.0;
  if (pearle_status status =
          pearle_riemann_bounds(options.grid_intervals, &lower, &upper);
      status != PEARLE_OK) {
    return fail_status("--grid-intervals", status);
  }
  double combined_integral = 0.0;
  pearle_combined_formula_integral(options.grid_intervals,
                                   &combined_integral);

  CsvFile csv(options.out, "r,f_R,f_uniform_ball,f_pearle_combined");
  if (!csv.ok()) return fail_open(options.out);
  for (std::int64_t i = 0; i <= options.grid_intervals; ++i) {
    const double r = static_cast<double>(i) /
                     static_cast<double>(options.grid_intervals);
    double f_r = 0.0;
    pearle_r_density(r, &f_r);
    csv.row({fmt(r), fmt(f_r), fmt(pearle_uniform_ball_density(r)),
             fmt(pearle_combined_formula_density(r))});
  }
  if (!csv.close()) return fail_write(options.out);

  std::printf("riemann_lower = %s\n", fmt(lower).c_str());
  std::printf("riemann_upper = %s\n", fmt(upper).c_str());
  std::printf("pearle_combined_integral = %s\n",
              fmt(combined_integral).c_str());
  return 0;
}

struct AppendixOptions {
  std::string mu = "constant";
  std::int64_t grid = 10000;
  std::int64_t trim = 100;
  std::string out;
};

int run_appendix(const AppendixOptions& options) {
  const int mu_choice = options.mu == "g-constant" ? PEARLE_MU_G_CONSTANT
                                                   : PEARLE_MU_CONSTANT;
  const bool with_reference = mu_choice == PEARLE_MU_CONSTANT;

  pearle_appendix_result* result = nullptr;
  if (pearle_status status = pearle_appendix_run(mu_choice, options.grid,
                                                 options.trim, &result);
      status != PEARLE_OK) {
    return fail_status("appendix", status);
  }

  CsvFile csv(options.out, with_reference ? "s,h_normalized,reference"
                                          : "s,h_normalized");
  if (!csv.ok()) {
    pearle_appendix_destroy(result);
    return fail_open(options.out);
  }
  const std::size_t count = pearle_appendix_point_count(result);
  for (std::size_t i = 0; i < count; ++i) {
    double s = 0.0;
    double h = 0.0;
    double reference = 0.0;
    pearle_appendix_point(result, i, &s, &h, &reference);
    if (with_reference) {
      csv.row({fmt(s), fmt(h), fmt(reference)});
    } else {
      csv.row({fmt(s), fmt(h)});
    }
  }
  double min = 0.0;
  double max = 0.0;
  int has_negative = 0;
  double negative_fraction = 0.0;
  pearle_appendix_positivity(result, &min, &max, &has_negative,
                             &negative_fraction);
  pearle_appendix_destroy(result);
  if (!csv.close()) return fail_write(options.out);

  std::printf("h_min = %s\n", fmt(min).c_str());
  std::printf("h_max = %s\n", fmt(max).c_str());
  std::printf("has_negative = %s\n", has_negative ? "true" : "false");
  std::printf("negative_fraction = %s\n", fmt(negative_fraction).c_str());
  return 0;
}

struct CaricatureOptions {
  std::uint64_t points = 1000;
  std::uint64_t seed = 1234;
  std::string out;
};

int run_caricature(const CaricatureOptions& options) {
  std::vector<pearle_caricature_point> points(options.points);
  if (pearle_status status = pearle_caricature_sample(
          options.points, options.seed, points.data());
      status != PEARLE_OK) {
    return fail_status("caricature", status);
  }

  CsvFile csv(options.out, "kind,x,y,class");
  if (!csv.ok()) return fail_open(options.out);

  // Detection-region boundary: the four signed branches of
  // (r cos(r pi/2), r sin(r pi/2)) for r in [0, 1], then the unit circle.
  const int kBoundarySamples = 1000;
  const double kHalfPi = 1.5707963267948966;
  for (int sx : {+1, -1}) {
    for (int sy : {+1, -1}) {
      for (int i = 0; i <= kBoundarySamples; ++i) {
        const double r = static_cast<double>(i) / kBoundarySamples;
        const double x = sx * r * std::cos(r * kHalfPi);
        const double y = sy * r * std::sin(r * kHalfPi);
        csv.row({"boundary", fmt(x), fmt(y), ""});
      }
    }
  }
  for (int i = 0; i <= kBoundarySamples; ++i) {
    const double t = 4.0 * kHalfPi * static_cast<double>(i) / kBoundarySamples;
    csv.row({"boundary", fmt(std::cos(t)), fmt(std::sin(t)), ""});
  }

  std::uint64_t undetected = 0;
  for (const pearle_caricature_point& point : points) {
    const char* cls = point.outcome > 0   ? "up"
                      : point.outcome < 0 ? "down"
                                          : "undetected";
    if (point.outcome == 0) ++undetected;
    csv.row({"point", fmt(point.x), fmt(point.y), cls});
  }
  if (!csv.close()) return fail_write(options.out);

  std::printf("undetected_fraction = %s\n",
              fmt(static_cast<double>(undetected) /
                  static_cast<double>(options.points))
                  .c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pearle detection-loophole model: seeded experiments, "
               "density tables, threshold-distribution analysis, and the "
               "2D caricature point cloud, emitted as CSV."};
  app.require_subcommand(1);

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Angle sweep of correlations and pair detection rates");
  sweep_cmd->add_option("--pairs", sweep.pairs, "Hidden states per angle grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Random seed")->required();
  sweep_cmd->add_option("--beta-deg", sweep.beta_deg,
                        "Fixed setting b (degrees, equatorial plane)")
      ->capture_default_str();
  sweep_cmd->add_option("--step-deg", sweep.step_deg,
                        "Grid step for setting a (must divide 360)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--convention", sweep.convention,
                        "Correlation convention")
      ->check(CLI::IsMember({"outcomes", "alignment"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--fresh-per-angle", sweep.fresh_per_angle,
                      "Draw an independent sample per angle instead of one "
                      "shared sample");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path")->required();

  DensityOptions density;
  CLI::App* density_cmd = app.add_subcommand(
      "density", "Density table of R with the Riemann bound check");
  density_cmd
      ->add_option("--grid-intervals", density.grid_intervals,
                   "Number of grid intervals on [0, 1]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  density_cmd->add_option("--out", density.out, "Output CSV path")
      ->required();

  AppendixOptions appendix;
  CLI::App* appendix_cmd = app.add_subcommand(
      "appendix", "Candidate threshold densities from the mu operator");
  appendix_cmd->add_option("--mu", appendix.mu, "Generator choice")
      ->check(CLI::IsMember({"constant", "g-constant"}))
      ->capture_default_str();
  appendix_cmd->add_option("--grid", appendix.grid, "Grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  appendix_cmd
      ->add_option("--trim", appendix.trim,
                   "Points trimmed at the right endpoint")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  appendix_cmd->add_option("--out", appendix.out, "Output CSV path")
      ->required();

  CaricatureOptions caricature;
  CLI::App* caricature_cmd = app.add_subcommand(
      "caricature", "2D caricature point cloud with region boundaries");
  caricature_cmd
      ->add_option("--points", caricature.points, "Number of sampled points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  caricature_cmd->add_option("--seed", caricature.seed, "Random seed")
      ->capture_default_str();
  caricature_cmd->add_option("--out", caricature.out, "Output CSV path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (sweep_cmd->parsed()) return run_sweep(sweep);
  if (density_cmd->parsed()) return run_density(density);
  if (appendix_cmd->parsed()) return run_appendix(appendix);
  if (caricature_cmd->parsed()) return run_caricature(caricature);
  return 1;
}
