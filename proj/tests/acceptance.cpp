// One PASS/FAIL line per acceptance criterion; exit status is the failure count.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "hill4/central_config.hpp"
#include "hill4/core_types.hpp"
#include "hill4/equilibria.hpp"
#include "hill4/four_body.hpp"
#include "hill4/harmonics.hpp"
#include "hill4/hill_model.hpp"
#include "hill4/propagate.hpp"
#include "oracles.hpp"

using namespace hill4;
using cd = std::complex<double>;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s  %d  %-28s %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const SystemParams& hektor() {
  static const SystemParams p = normalize_system(hektor_inputs());
  return p;
}

void harmonic_table() {
  const auto set = harmonics::ellipsoid_coefficients(harmonics::hektor_ellipsoid(), 6);
  const struct {
    int n, m;
    double v;
  } rows[] = {{2, 0, -0.476775}, {2, 2, 0.230232},  {4, 0, 0.714275},
              {4, 2, -0.078406}, {4, 4, 0.009465},  {6, 0, -1.54769},
              {6, 2, 0.076832},  {6, 4, -0.002507}, {6, 6, 0.000201}};
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, std::fabs(set.coefficient(r.n, r.m) - r.v));
  report(1, "harmonic table", worst <= 1e-5, fmt("max |dC_nm| = %.2e (9 entries)", worst));
}

void normalization() {
  const auto& p = hektor();
  const double e_mu = std::fabs(p.mu - 0.0009533386);
  const double e_m3 = std::fabs(p.m3 - 3.97308e-12);
  const double e_c = std::fabs(p.little_c - -1.32716e-7);
  const double e_rho = std::fabs(p.rho3 - 0.000746);
  const double e_bigc = std::fabs(p.big_c - 3.329215e-15);
  const bool ok = e_mu <= 1e-9 && e_m3 <= 1e-16 && e_c <= 1e-11 && e_rho <= 1e-6 && e_bigc <= 1e-20;
  report(2, "normalization", ok,
         fmt("dmu %.1e dm3 %.1e dc %.1e", e_mu, e_m3, e_c) +
             fmt(" drho3 %.1e dC %.1e", e_rho, e_bigc));
}

void rotation_eigenvalues() {
  const auto& p = hektor();
  const auto e = hill::rotation_eigenvalues(p.mu, p.v);
  const double r1 = oracle::rel(e.lambda1, 0.0021444999866622183);
  const double r2 = oracle::rel(e.lambda2, 2.997855500013338);
  const double sum = std::fabs(e.lambda1 + e.lambda2 - 3.0);
  const double ulp3 = 2 * std::numeric_limits<double>::epsilon();
  report(3, "rotation eigenvalues", r1 < 1e-12 && r2 < 1e-12 && sum <= ulp3,
         fmt("rel(l1) %.1e rel(l2) %.1e |l1+l2-3| %.1e", r1, r2, sum));
}

void equilibria() {
  const auto& p = hektor();
  using eq::Axis;
  const double rx = eq::find_equilibrium(Axis::x, p.lambda1, p.lambda2, p.little_c).r_star;
  const double ry = eq::find_equilibrium(Axis::y, p.lambda1, p.lambda2, p.little_c).r_star;
  const double rz = eq::find_equilibrium(Axis::z, p.lambda1, p.lambda2, p.little_c).r_star;
  const auto h0 = eq::hill_params_for(p.mu, p.m3, 0.0);
  const double rx0 = eq::find_equilibrium(Axis::x, h0.lambda1, h0.lambda2, 0.0).r_star;
  const double ry0 = eq::find_equilibrium(Axis::y, h0.lambda1, h0.lambda2, 0.0).r_star;
  const double loc = std::max({std::fabs(rx - 0.6935267570), std::fabs(ry - 7.7545747196),
                               std::fabs(rz - 0.0008923544), std::fabs(rx0 - 0.6935265657),
                               std::fabs(ry0 - 7.7545747024)});
  const double kx = std::fabs(hill_to_km(p, rx) - 85512.774);
  const double ky = std::fabs(hill_to_km(p, ry) - 956149.406);
  const double kz = std::fabs(hill_to_km(p, rz) - 110.028);
  report(4, "equilibria", loc <= 1e-9 && kx <= 0.1 && ky <= 1 && kz <= 0.01,
         fmt("max |dr| %.1e; km errors %.3f / %.3f", loc, kx, ky) + fmt(" / %.4f", kz));
}

double component_error(const eq::EquilibriumReport& r, cd want) {
  double best = INFINITY;
  for (const auto& ev : r.eigenvalues) {
    double e = 0;
    e = std::max(e, want.real() != 0 ? oracle::rel(ev.real(), want.real()) : std::fabs(ev.real()));
    e = std::max(e, want.imag() != 0 ? oracle::rel(ev.imag(), want.imag()) : std::fabs(ev.imag()));
    best = std::min(best, e);
  }
  return best;
}

void stability_spectra() {
  const auto& p = hektor();
  using eq::Axis;
  auto rep = [&](Axis a) {
    return eq::stability_spectrum(eq::find_equilibrium(a, p.lambda1, p.lambda2, p.little_c),
                                  p.lambda1, p.lambda2, p.little_c);
  };
  const auto x = rep(Axis::x), y = rep(Axis::y), z = rep(Axis::z);
  double worst = 0;
  int checked = 0;
  auto check = [&](const eq::EquilibriumReport& r, cd w) {
    for (cd s : {w, -w}) {
      worst = std::max(worst, component_error(r, s));
      ++checked;
    }
  };
  check(x, {2.50694248, 0});
  check(x, {0, 2.07048307});
  check(x, {0, 1.99946504});
  check(y, {0, 0.98901573});
  check(y, {0, 0.14036874});
  check(y, {0, 1.00107168});
  check(z, {37514.0432165187, 0.9999999998});
  check(z, {37514.0432165187, -0.9999999998});
  check(z, {0, 53052.8687});
  const bool classes = x.stability == eq::StabilityClass::center_center_saddle &&
                       y.stability == eq::StabilityClass::center_center_center &&
                       z.stability == eq::StabilityClass::center_complex_saddle;
  report(5, "stability spectra", worst < 1e-6 && classes,
         fmt("max rel %.1e over %.0f components; classes ", worst, checked) +
             (classes ? "match" : "differ"));
}

void stability_over_mu() {
  const auto& p = hektor();
  const double c = -1.32716e-7;
  std::vector<double> grid;
  for (int k = 1; k <= 50; ++k) grid.push_back(0.5 * k / 50);
  using eq::Axis;
  const auto z = eq::classify_over_parameters(Axis::z, grid, c, p.m3);
  const auto x = eq::classify_over_parameters(Axis::x, grid, c, p.m3);
  const auto y = eq::classify_over_parameters(Axis::y, grid, c, p.m3);
  bool z_ok = true, x_ok = true;
  for (const auto& r : z.rows) z_ok &= r.stability == eq::StabilityClass::center_complex_saddle && r.pattern_ok;
  for (const auto& r : x.rows) x_ok &= r.stability == eq::StabilityClass::center_center_saddle && r.pattern_ok;
  const bool y_ok = y.sign_changes == 1 && y.mu_star.has_value() && y.mu_star_bracket.has_value();
  std::string detail = std::string("z ") + (z_ok ? "ok" : "bad") + ", x " + (x_ok ? "ok" : "bad") +
                       fmt(", y sign changes %.0f", y.sign_changes);
  if (y.mu_star) detail += fmt(", mu* = %.10f in [%.2f, %.2f]", *y.mu_star, (*y.mu_star_bracket)[0],
                               (*y.mu_star_bracket)[1]);
  report(6, "stability over mu", z_ok && x_ok && y_ok, detail);
}

void krein() {
  const auto& p = hektor();
  std::vector<double> grid;
  const double lo = 0.000892354498497342, hi = 0.01;
  for (int k = 0; k < 200; ++k) grid.push_back(lo + (hi - lo) * k / 199.0);
  const auto t = eq::krein_limit_check(grid, p.lambda1, p.lambda2);
  report(7, "Krein sweep", t.max_b_deviation < 4e-7 && t.a_sign_constant && t.a_nonzero,
         fmt("max ||b|-1| = %.2e; a sign ", t.max_b_deviation) +
             (t.a_sign_constant ? "constant" : "changes"));
}

void properties() {
  const auto& p = hektor();
  std::vector<std::string> bad;
  auto g = oracle::rng(2024);

  // derivatives of both models against finite differences
  double hill_worst = 0, fb_worst = 0;
  const FourBodyModel fb(p, cc::build_triangle(p));
  for (int k = 0; k < 100; ++k) {
    const Vec3 q = oracle::random_point(g, 0.05, 5.0);
    const double h = 1e-6 * norm(q);
    const auto grad = hill::gradient(q, p.lambda1, p.lambda2, p.little_c);
    hill_worst = std::max(hill_worst, oracle::vec_rel_err(grad, oracle::fd_gradient([&](const Vec3& x) {
      return hill::potential(x, p.lambda1, p.lambda2, p.little_c); }, q, h)));
    hill_worst = std::max(hill_worst, oracle::mat_rel_err(hill::hessian(q, p.lambda1, p.lambda2, p.little_c),
        oracle::fd_jacobian([&](const Vec3& x) { return hill::gradient(x, p.lambda1, p.lambda2, p.little_c); }, q, h)));
    Vec3 s;
    do {
      s = {oracle::uniform(g, -1.5, 1.5), oracle::uniform(g, -1.5, 1.5), oracle::uniform(g, -0.5, 0.5)};
    } while (fb.min_body_distance(s) < 0.05);
    fb_worst = std::max(fb_worst, oracle::vec_rel_err(fb.gradient(s), oracle::fd_gradient([&](const Vec3& x) {
      return fb.potential(x); }, s, 1e-6)));
  }
  if (!(hill_worst < 1e-7 && fb_worst < 1e-7)) bad.push_back("derivatives");

  // factored quartic against the dense eigensolver
  double dense = 0;
  for (auto axis : {eq::Axis::x, eq::Axis::y, eq::Axis::z}) {
    for (int k = 0; k < 50; ++k) {
      const double mu = oracle::uniform(g, 1e-4, 0.5);
      const double c = -std::exp(oracle::uniform(g, std::log(1e-9), std::log(1e-3)));
      const auto hp = eq::hill_params_for(mu, p.m3, c);
      const auto r = eq::stability_spectrum(eq::find_equilibrium(axis, hp.lambda1, hp.lambda2, c),
                                            hp.lambda1, hp.lambda2, c);
      dense = std::max(dense, eq::eigensolver_cross_check(r));
    }
  }
  if (!(dense < 1e-8)) bad.push_back("quartic");

  // shifted and rotated Hamiltonians
  double frames = 0;
  const auto rot = hill::build_rotation(p.mu, p.v);
  for (int k = 0; k < 100; ++k) {
    const PhaseState s{Frame::hill_shifted, Representation::canonical_momentum,
                       oracle::random_point(g, 0.1, 2.0),
                       {oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)}};
    frames = std::max(frames, std::fabs(hill::hamiltonian_shifted(s, p.mu, p.v, p.little_c) -
                                        hill::hamiltonian_rotated(hill::shifted_to_rotated(rot, s),
                                                                  p.lambda1, p.lambda2, p.little_c)));
  }
  if (!(frames < 1e-13)) bad.push_back("frames");

  // energy drift over t = 10 at rel_tol 1e-12
  const double r0 = 0.1;
  const auto tr = integrate_hill(PhaseState::unpack(Frame::hill_rotated, Representation::velocity,
                                                    {r0, 0, 0, 0, std::sqrt(1 / r0) - r0, 0}),
                                 0, 10, IntegrateOptions{}, p.lambda1, p.lambda2, p.little_c);
  if (!(tr.max_energy_drift < 1e-10)) bad.push_back("drift");

  // central configuration residuals and the Baltagiannis form
  double resid = 0, balt = 0;
  for (int k = 0; k < 200; ++k) {
    double m[3] = {oracle::uniform(g, 0.05, 1), oracle::uniform(g, 1e-6, 1), oracle::uniform(g, 1e-9, 1)};
    std::sort(m, m + 3, std::greater<>());
    const double sum = m[0] + m[1] + m[2];
    for (double& x : m) x /= sum;
    cc::TriangleConfig t;
    t.v = oracle::uniform(g, 0.05, 1.0);
    t.masses = {m[0], m[1], m[2]};
    t.vertices = cc::vertex_positions(m[1], m[2], t.v);
    resid = std::max(resid, cc::constraint_residuals(t).max_abs());
    const auto a = cc::baltagiannis_positions(m[0], m[1], m[2]);
    const auto b = cc::vertex_positions(m[1], m[2], 1.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j) balt = std::max(balt, std::fabs(a[i][j] - b[i][j]));
  }
  if (!(resid < 1e-12)) bad.push_back("constraints");
  if (!(balt < 1e-12)) bad.push_back("Baltagiannis");

  // mirror symmetry of the planar flow
  const State6 s0{0.3, 0.1, 0, 0.2, 1.5, 0};
  IntegrateOptions fwd, bwd;
  for (int i = 0; i <= 10; ++i) {
    fwd.sample_times.push_back(0.5 * i);
    bwd.sample_times.push_back(-0.5 * i);
  }
  const auto a = integrate_hill(PhaseState::unpack(Frame::hill_rotated, Representation::velocity, s0),
                                0, 5, fwd, p.lambda1, p.lambda2, p.little_c);
  const auto b = integrate_hill(PhaseState::unpack(Frame::hill_rotated, Representation::velocity,
                                                   hill::mirror(s0)),
                                0, -5, bwd, p.lambda1, p.lambda2, p.little_c);
  double mirror = 0;
  for (std::size_t i = 0; i < a.states.size(); ++i)
    mirror = std::max(mirror, oracle::max_abs_diff(hill::mirror(a.states[i].packed()), b.states[i].packed()));
  if (!(mirror < 1e-9)) bad.push_back("mirror");

  std::string detail = fmt("fd %.1e/%.1e dense %.1e", hill_worst, fb_worst, dense) +
                       fmt(" H %.1e drift %.1e", frames, tr.max_energy_drift) +
                       fmt(" cc %.1e balt %.1e mirror %.1e", resid, balt, mirror);
  for (const auto& s : bad) detail += " [" + s + "]";
  report(8, "property suites", bad.empty(), detail);
}

void limits() {
  const double rx = eq::find_equilibrium(eq::Axis::x, 0.0, 3.0, 0.0).r_star;
  const double hill = std::fabs(rx - std::cbrt(1.0 / 3.0));
  const auto& p = hektor();
  const auto h0 = eq::hill_params_for(p.mu, p.m3, 0.0);
  const double ex = std::fabs(eq::find_equilibrium(eq::Axis::x, h0.lambda1, h0.lambda2, 0.0).r_star - 0.6935265657);
  const double ey = std::fabs(eq::find_equilibrium(eq::Axis::y, h0.lambda1, h0.lambda2, 0.0).r_star - 7.7545747024);
  report(9, "limit collapses", hill <= 1e-12 && ex <= 1e-9 && ey <= 1e-9,
         fmt("|r - 3^(-1/3)| %.1e; non-oblate %.1e / %.1e", hill, ex, ey));
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* title;
    void (*fn)();
  } criteria[] = {{1, "harmonic table", harmonic_table},
                  {2, "normalization", normalization},
                  {3, "rotation eigenvalues", rotation_eigenvalues},
                  {4, "equilibria", equilibria},
                  {5, "stability spectra", stability_spectra},
                  {6, "stability over mu", stability_over_mu},
                  {7, "Krein sweep", krein},
                  {8, "property suites", properties},
                  {9, "limit collapses", limits}};
  for (const auto& c : criteria) {
    try {
      c.fn();
    } catch (const std::exception& e) {
      report(c.id, c.title, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
