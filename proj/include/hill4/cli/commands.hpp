#pragma once

#include <string>
#include <vector>

#include "hill4/cli/table.hpp"
#include "hill4/core_types.hpp"
#include "hill4/harmonics.hpp"
#include "hill4/propagate.hpp"

namespace hill4::cli {

enum class Spacing { linear, log };

// Inclusive grid of `count` points between start and stop.
struct SweepRange {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  Spacing spacing = Spacing::linear;

  // Throws Error(config_error) unless count >= 2, start != stop and, for log
  // spacing, both ends share a sign and are non-zero.
  void validate() const;
  std::vector<double> values() const;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string input_path;  // empty: built-in Sun-Jupiter-Hektor values
  std::string subcommand;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  SweepRange range;
};

Table cmd_harmonics(const harmonics::EllipsoidShape& shape, int max_degree);
Table cmd_central_config(const SystemParams& params);
Table cmd_equilibria(const SystemParams& params);
Table cmd_stability(const SystemParams& params);

// Magnitudes in km/s^2 for a test particle at distance r (km) from the
// tertiary. A row flagged marker = 1 is added at the moonlet distance.
Table cmd_forces(const SystemParams& params, const std::vector<double>& distances_km, bool tidal);
constexpr double kMoonletDistanceKm = 957.5;
constexpr double kGravitationalConstant = 6.674e-20;  // km^3 kg^-1 s^-2

Table cmd_sweep_z(const SystemParams& params, const SweepRange& c20_range, bool parallel = true);
Table cmd_sweep_krein(const SystemParams& params, const SweepRange& rz_range,
                      bool parallel = true);

struct IntegrateRequest {
  Model model = Model::hill;
  PhaseState initial;
  double t0 = 0.0;
  double t1 = 10.0;
  int samples = 101;  // uniform output times including both ends
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
};

// Columns t,x,y,z,vx,vy,vz,H; states are written in velocity form.
Table cmd_integrate(const SystemParams& params, const IntegrateRequest& req);

}  // namespace hill4::cli
