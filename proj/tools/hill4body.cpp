#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "hill4/central_config.hpp"
#include "hill4/cli/commands.hpp"
#include "hill4/error.hpp"

using namespace hill4;

namespace {

cli::Spacing parse_spacing(const std::string& s) {
  if (s == "linear") return cli::Spacing::linear;
  if (s == "log") return cli::Spacing::log;
  throw Error(Errc::config_error, "spacing must be 'linear' or 'log', got '" + s + "'");
}

State6 parse_state(const std::string& text) {
  State6 s{};
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 6) break;
    try {
      std::size_t used = 0;
      s[k] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::config_error, "--state component '" + item + "' is not a number");
    }
    ++k;
  }
  if (k != 6 || std::getline(ss, item, ',')) {
    throw Error(Errc::config_error, "--state needs exactly six comma-separated numbers");
  }
  return s;
}

void apply_thread_cap() {
  const char* env = std::getenv("HILL4BODY_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) {
    throw Error(Errc::config_error, std::string("HILL4BODY_THREADS must be a positive integer, got '") +
                                        env + "'");
  }
  omp_set_num_threads(static_cast<int>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hill four-body problem with an oblate tertiary"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig run;
  std::string format = "csv";
  app.add_option("--config", run.input_path, "key = value file with the physical inputs");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", run.output_path, "output file (default: stdout)");

  auto* harm = app.add_subcommand("harmonics", "ellipsoid harmonic coefficients");
  auto shape = harmonics::hektor_ellipsoid();
  int degree = 6;
  harm->add_option("--degree", degree, "even maximum degree");
  harm->add_option("--a", shape.a, "semi-axis a (km)");
  harm->add_option("--b", shape.b, "semi-axis b (km)");
  harm->add_option("--c", shape.c, "semi-axis c (km)");
  harm->add_option("--radius", shape.reference_radius, "reference radius (km)");

  auto* ccfg = app.add_subcommand("central-config", "isosceles central configuration");
  auto* equi = app.add_subcommand("equilibria", "axis equilibria of the Hill model");
  auto* stab = app.add_subcommand("stability", "equilibria with their linear spectra");

  auto* forces = app.add_subcommand("forces", "perturbation magnitudes versus distance");
  cli::SweepRange force_range{100.0, 1e6, 200, cli::Spacing::log};
  bool tidal = false;
  forces->add_option("--start", force_range.start, "first distance (km)");
  forces->add_option("--stop", force_range.stop, "last distance (km)");
  forces->add_option("--count", force_range.count, "grid points");
  forces->add_flag("--tidal", tidal, "also emit differential (tidal) accelerations");

  auto* sz = app.add_subcommand("sweep-z", "vertical equilibrium distance versus c20");
  cli::SweepRange z_range{-0.95, -0.001, 200, cli::Spacing::linear};
  std::string z_spacing = "linear";
  sz->add_option("--start", z_range.start, "first c20");
  sz->add_option("--stop", z_range.stop, "last c20");
  sz->add_option("--count", z_range.count, "grid points");
  sz->add_option("--spacing", z_spacing, "linear or log");

  auto* sk = app.add_subcommand("sweep-krein", "quartet components versus vertical distance");
  cli::SweepRange k_range{0.000892354498497342, 0.01, 200, cli::Spacing::linear};
  std::string k_spacing = "linear";
  sk->add_option("--start", k_range.start, "first r_z (Hill units)");
  sk->add_option("--stop", k_range.stop, "last r_z (Hill units)");
  sk->add_option("--count", k_range.count, "grid points");
  sk->add_option("--spacing", k_spacing, "linear or log");

  auto* integ = app.add_subcommand("integrate", "propagate a trajectory");
  cli::IntegrateRequest req;
  std::string model = "hill";
  std::string state_text;
  bool momentum = false;
  integ->add_option("--model", model, "hill or 4bp")->check(CLI::IsMember({"hill", "4bp"}));
  integ->add_option("--state", state_text, "x,y,z,vx,vy,vz (or momenta with --momentum)");
  integ->add_flag("--momentum", momentum, "state carries canonical momenta (4bp only)");
  integ->add_option("--t0", req.t0, "start time");
  integ->add_option("--t1", req.t1, "end time");
  integ->add_option("--samples", req.samples, "uniform output samples including both ends");
  integ->add_option("--rtol", req.rel_tol, "relative tolerance");
  integ->add_option("--atol", req.abs_tol, "absolute tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_thread_cap();
    run.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
    const PhysicalInputs inputs = run.input_path.empty() ? hektor_inputs() : load_config(run.input_path);
    const SystemParams params = normalize_system(inputs);

    cli::Table table;
    if (*harm) {
      run.subcommand = "harmonics";
      table = cli::cmd_harmonics(shape, degree);
    } else if (*ccfg) {
      run.subcommand = "central-config";
      table = cli::cmd_central_config(params);
    } else if (*equi) {
      run.subcommand = "equilibria";
      table = cli::cmd_equilibria(params);
    } else if (*stab) {
      run.subcommand = "stability";
      table = cli::cmd_stability(params);
    } else if (*forces) {
      run.subcommand = "forces";
      run.range = force_range;
      table = cli::cmd_forces(params, force_range.values(), tidal);
    } else if (*sz) {
      run.subcommand = "sweep-z";
      z_range.spacing = parse_spacing(z_spacing);
      run.range = z_range;
      table = cli::cmd_sweep_z(params, z_range);
    } else if (*sk) {
      run.subcommand = "sweep-krein";
      k_range.spacing = parse_spacing(k_spacing);
      run.range = k_range;
      table = cli::cmd_sweep_krein(params, k_range);
    } else if (*integ) {
      run.subcommand = "integrate";
      req.model = model == "4bp" ? Model::four_body : Model::hill;
      const Frame frame = req.model == Model::hill ? Frame::hill_rotated : Frame::synodic_4bp;
      const Representation rep = momentum ? Representation::canonical_momentum : Representation::velocity;
      State6 s{};
      if (!state_text.empty()) {
        s = parse_state(state_text);
      } else if (req.model == Model::hill) {
        s = {0.1, 0.0, 0.0, 0.0, std::sqrt(10.0) - 0.1, 0.0};  // near-circular, prograde
      } else {
        const auto tri = cc::build_triangle(params);
        s = {tri.vertices[2][0] + 0.01, tri.vertices[2][1], 0.0, 0.0, 0.0, 0.0};
      }
      req.initial = PhaseState::unpack(frame, rep, s);
      table = cli::cmd_integrate(params, req);
    }

    if (run.output_path.empty()) {
      run.format == cli::OutputFormat::json ? cli::write_json(std::cout, table)
                                            : cli::write_csv(std::cout, table);
    } else {
      std::ofstream out(run.output_path);
      if (!out) throw Error(Errc::config_error, "cannot write '" + run.output_path + "'");
      run.format == cli::OutputFormat::json ? cli::write_json(out, table) : cli::write_csv(out, table);
    }
  } catch (const Error& e) {
    std::cerr << "hill4body " << app.get_subcommands().front()->get_name() << ": " << e.what() << '\n';
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "hill4body: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
