#include "hill4/cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "hill4/central_config.hpp"
#include "hill4/equilibria.hpp"
#include "hill4/error.hpp"
#include "hill4/sweep.hpp"

namespace hill4::cli {

void SweepRange::validate() const {
  if (count < 2) throw Error(Errc::config_error, "sweep count must be >= 2");
  if (!(start != stop) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw Error(Errc::config_error, "sweep start and stop must be finite and distinct");
  }
  if (spacing == Spacing::log && !(start * stop > 0.0)) {
    throw Error(Errc::config_error, "log spacing needs non-zero ends of the same sign");
  }
}

std::vector<double> SweepRange::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    if (spacing == Spacing::linear) {
      v[i] = start + s * (stop - start);
    } else {
      v[i] = std::copysign(std::exp(std::log(std::fabs(start)) +
                                    s * (std::log(std::fabs(stop)) - std::log(std::fabs(start)))),
                           start);
    }
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

Table cmd_harmonics(const harmonics::EllipsoidShape& shape, int max_degree) {
  const auto set = harmonics::ellipsoid_coefficients(shape, max_degree);
  Table t;
  t.columns = {"n", "m", "C_nm"};
  for (const auto& e : set.entries()) t.add_row({static_cast<long long>(e.n), static_cast<long long>(e.m), e.value});
  t.meta["a_km"] = shape.a;
  t.meta["b_km"] = shape.b;
  t.meta["c_km"] = shape.c;
  t.meta["reference_radius_km"] = shape.reference_radius;
  t.meta["max_degree"] = max_degree;
  return t;
}

Table cmd_central_config(const SystemParams& params) {
  const auto tri = cc::build_triangle(params);
  const auto res = cc::constraint_residuals(tri);
  const auto stat = cc::stationarity_residuals(params.big_c, tri.u, tri.v, params.omega_sq);
  Table t;
  t.columns = {"body", "x", "y"};
  const char* names[3] = {"1", "2", "3"};
  for (int i = 0; i < 3; ++i) t.add_row({std::string(names[i]), tri.vertices[i][0], tri.vertices[i][1]});
  t.meta["u"] = tri.u;
  t.meta["v"] = tri.v;
  t.meta["v_minus_1"] = params.v_defect;
  t.meta["omega"] = tri.omega;
  t.meta["masses"] = {tri.masses[0], tri.masses[1], tri.masses[2]};
  t.meta["residuals"] = {{"d12", res.d12},         {"d13", res.d13},
                         {"d23", res.d23},         {"barycenter_x", res.bary_x},
                         {"barycenter_y", res.bary_y}, {"mass_sum", res.mass_sum},
                         {"y1", res.y1},           {"stationarity_12", stat[0]},
                         {"stationarity_13", stat[1]}, {"stationarity_23", stat[2]}};
  return t;
}

namespace {

constexpr eq::Axis kAxes[3] = {eq::Axis::x, eq::Axis::y, eq::Axis::z};

void add_params_meta(Table& t, const SystemParams& p) {
  t.meta["mu"] = p.mu;
  t.meta["m3"] = p.m3;
  t.meta["c"] = p.little_c;
  t.meta["lambda1"] = p.lambda1;
  t.meta["lambda2"] = p.lambda2;
  t.meta["hill_length_km"] = p.hill_length_km;
}

}  // namespace

Table cmd_equilibria(const SystemParams& params) {
  Table t;
  t.columns = {"axis", "r_star", "x", "y", "z", "r_km"};
  for (auto axis : kAxes) {
    if (axis == eq::Axis::z && params.little_c == 0.0) continue;
    const auto rep = eq::find_equilibrium(axis, params.lambda1, params.lambda2, params.little_c);
    for (double sign : {1.0, -1.0}) {
      const Vec3 q = sign * rep.location;
      t.add_row({std::string(eq::axis_name(axis)), rep.r_star, q[0], q[1], q[2],
                 hill_to_km(params, rep.r_star)});
    }
  }
  add_params_meta(t, params);
  return t;
}

Table cmd_stability(const SystemParams& params) {
  Table t;
  t.columns = {"axis", "r_star", "x", "y", "z", "Oxx", "Oyy", "Ozz", "A", "B", "D"};
  for (int k = 1; k <= 6; ++k) t.columns.push_back("re" + std::to_string(k));
  for (int k = 1; k <= 6; ++k) t.columns.push_back("im" + std::to_string(k));
  t.columns.push_back("class");

  for (auto axis : kAxes) {
    if (axis == eq::Axis::z && params.little_c == 0.0) continue;
    auto rep = eq::find_equilibrium(axis, params.lambda1, params.lambda2, params.little_c);
    rep = eq::stability_spectrum(rep, params.lambda1, params.lambda2, params.little_c);
    for (double sign : {1.0, -1.0}) {
      const Vec3 q = sign * rep.location;
      std::vector<Cell> row = {std::string(eq::axis_name(axis)), rep.r_star, q[0], q[1], q[2],
                               rep.hessian_diag[0], rep.hessian_diag[1], rep.hessian_diag[2],
                               rep.a_coef, rep.b_coef, rep.disc};
      for (const auto& z : rep.eigenvalues) row.emplace_back(z.real());
      for (const auto& z : rep.eigenvalues) row.emplace_back(z.imag());
      row.emplace_back(std::string(eq::class_name(rep.stability)));
      t.add_row(std::move(row));
    }
  }
  add_params_meta(t, params);
  return t;
}

Table cmd_forces(const SystemParams& params, const std::vector<double>& distances_km, bool tidal) {
  const auto& in = params.physical;
  const double g = kGravitationalConstant;
  // With r13 = r23 = 1 both heavy bodies sit one unit distance from the tertiary.
  const double d_sun = in.distance_primary_secondary_km;
  const double d_jup = in.distance_primary_secondary_km;

  std::vector<std::pair<double, bool>> grid;
  for (double r : distances_km) {
    if (!(r >= 100.0 && r <= 1e6)) {
      throw Error(Errc::invalid_argument, "force distances must lie in [100, 1e6] km");
    }
    grid.emplace_back(r, false);
  }
  grid.emplace_back(kMoonletDistanceKm, true);
  std::stable_sort(grid.begin(), grid.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  Table t;
  t.columns = {"r_km", "log10_monopole", "log10_sun", "log10_jupiter", "log10_j2"};
  if (tidal) {
    t.columns.push_back("log10_sun_tidal");
    t.columns.push_back("log10_jupiter_tidal");
  }
  t.columns.push_back("marker");

  const double sun = g * in.mass_primary_kg / (d_sun * d_sun);
  const double jup = g * in.mass_secondary_kg / (d_jup * d_jup);
  for (const auto& [r, marker] : grid) {
    const double mono = g * in.mass_tertiary_kg / (r * r);
    const double rr = in.equivalent_radius_tertiary_km;
    const double j2 = 1.5 * g * in.mass_tertiary_kg * rr * rr * std::fabs(in.c20) / (r * r * r * r);
    std::vector<Cell> row = {r, std::log10(mono), std::log10(sun), std::log10(jup), std::log10(j2)};
    if (tidal) {
      row.emplace_back(std::log10(2.0 * g * in.mass_primary_kg * r / (d_sun * d_sun * d_sun)));
      row.emplace_back(std::log10(2.0 * g * in.mass_secondary_kg * r / (d_jup * d_jup * d_jup)));
    }
    row.emplace_back(static_cast<long long>(marker ? 1 : 0));
    t.add_row(std::move(row));
  }
  t.meta["units"] = "km/s^2";
  t.meta["G"] = g;
  t.meta["moonlet_km"] = kMoonletDistanceKm;
  return t;
}

Table cmd_sweep_z(const SystemParams& params, const SweepRange& c20_range, bool parallel) {
  const auto grid = c20_range.values();
  for (double c20 : grid) {
    if (!(c20 > -1.0 && c20 < 0.0)) throw Error(Errc::config_error, "c20 sweep must lie in (-1, 0)");
  }
  struct Row {
    double c20, c, r_hill, r_km, r_hat_km;
  };
  const double r3_km = params.physical.equivalent_radius_tertiary_km;
  const auto rows = index_map<Row>(
      grid.size(),
      [&](std::size_t i) {
        const double c20 = grid[i];
        const double c = params.rho3 * params.rho3 * c20 / 2.0;
        const auto hp = eq::hill_params_for(params.mu, params.m3, c);
        const auto rep = eq::find_equilibrium(eq::Axis::z, hp.lambda1, hp.lambda2, c);
        return Row{c20, c, rep.r_star, hill_to_km(params, rep.r_star),
                   eq::approx_z_distance(r3_km, c20)};
      },
      parallel);

  Table t;
  t.columns = {"c20", "c", "r_z_hill", "r_z_km", "r_hat_z_km"};
  double worst = 0.0;
  for (const auto& r : rows) {
    t.add_row({r.c20, r.c, r.r_hill, r.r_km, r.r_hat_km});
    worst = std::max(worst, std::fabs(r.r_hat_km - r.r_km) / r.r_km);
  }
  t.meta["max_relative_gap"] = worst;
  return t;
}

Table cmd_sweep_krein(const SystemParams& params, const SweepRange& rz_range, bool parallel) {
  const auto grid = rz_range.values();
  const auto k = parallel ? eq::krein_limit_check(grid, params.lambda1, params.lambda2)
                          : eq::krein_limit_check_serial(grid, params.lambda1, params.lambda2);
  Table t;
  t.columns = {"r_z", "c", "a", "abs_b", "abs_b_minus_1"};
  for (const auto& r : k.rows) {
    t.add_row({r.r_z, r.c, r.a, std::fabs(r.b), std::fabs(std::fabs(r.b) - 1.0)});
  }
  t.meta["max_abs_b_minus_1"] = k.max_b_deviation;
  t.meta["a_sign_constant"] = k.a_sign_constant;
  t.meta["deviation_monotone"] = k.deviation_monotone;
  return t;
}

Table cmd_integrate(const SystemParams& params, const IntegrateRequest& req) {
  if (req.samples < 2) throw Error(Errc::config_error, "integrate needs at least 2 samples");
  IntegrateOptions opts;
  opts.rel_tol = req.rel_tol;
  opts.abs_tol = req.abs_tol;
  opts.sample_times = SweepRange{req.t0, req.t1, req.samples, Spacing::linear}.values();
  const auto tr = integrate(req.initial, req.t0, req.t1, opts, req.model, params);

  Table t;
  t.columns = {"t", "x", "y", "z", "vx", "vy", "vz", "H"};
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    const auto s = to_velocity(tr.states[i]);
    t.add_row({tr.times[i], s.position[0], s.position[1], s.position[2], s.motion[0],
               s.motion[1], s.motion[2], tr.energy[i]});
  }
  t.meta["model"] = std::string(model_name(req.model));
  t.meta["frame"] = std::string(frame_name(tr.frame));
  t.meta["max_energy_drift"] = tr.max_energy_drift;
  t.meta["steps"] = tr.steps;
  t.meta["rejected"] = tr.rejected;
  return t;
}

}  // namespace hill4::cli
