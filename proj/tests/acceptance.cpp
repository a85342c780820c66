// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cli_process.hpp"
#include "physkit/em.hpp"
#include "physkit/linalg.hpp"
#include "physkit/mechanics.hpp"
#include "physkit/scenarios.hpp"
#include "physkit/solver.hpp"
#include "random_vectors.hpp"

using namespace physkit;
using physkit::testing::rel_err;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 when no limit applies
  std::function<Outcome()> check;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// --- 1 ---------------------------------------------------------------------

Outcome vector_invariants() {
  constexpr int kCount = 10000;
  testing::VecGen gen(7);
  int failures = 0;
  for (int i = 0; i < kCount; ++i) {
    const Vec3 a = gen.vec3();
    const Vec3 b = gen.vec3();
    const Position p = gen.position();
    const Position q = gen.position();
    const double ma = magnitude(a), mb = magnitude(b);
    bool ok = a + b == b + a && dot(a, b) == dot(b, a);
    ok = ok && cross(a, b) == negate_v(cross(b, a));
    ok = ok && std::abs(dot(a, cross(a, b))) <= 1e-9 * ma * ma * mb &&
         std::abs(dot(b, cross(a, b))) <= 1e-9 * ma * mb * mb;
    const double lagrange = dot(cross(a, b), cross(a, b)) + dot(a, b) * dot(a, b);
    ok = ok && std::abs(lagrange - ma * ma * mb * mb) <= 1e-9 * ma * ma * mb * mb;
    ok = ok && parse_vec3(to_string(a)) == a && parse_position(to_string(p)) == p;
    const Position back = shift(p, displacement(p, q));
    const double scale = std::max({1.0, magnitude(displacement(origin, p)),
                                   magnitude(displacement(origin, q))});
    ok = ok && magnitude(displacement(back, q)) <= 1e-12 * scale;
    if (!ok) ++failures;
  }
  return {failures == 0, fmt("%d vectors, %d violations", kCount, failures)};
}

// --- 2 ---------------------------------------------------------------------

Outcome driven_oscillator_bounded() {
  constexpr std::size_t kSteps = 100000;
  double max_r = 0;
  std::size_t seen = 0;
  for (const ParticleState& s : solve_states(damped_driven_osc(0, 1, 0.7), 0.01,
                                             {0, vec(1, 0, 0), zero_v})) {
    max_r = std::max(max_r, magnitude(s.r));
    if (seen++ == kSteps) break;
  }
  return {max_r < 10 && std::isfinite(max_r), fmt("%zu steps, max |r| = %.4f m", kSteps, max_r)};
}

// --- 3 ---------------------------------------------------------------------

Outcome symplectic_contrast() {
  constexpr int kSteps = 10000;
  const auto a = harmonic_accel(1, 1);
  const auto energy = [](const ParticleState& s) { return 0.5 * (dot(s.v, s.v) + dot(s.r, s.r)); };
  ParticleState euler{0, vec(1, 0, 0), zero_v};
  ParticleState cromer = euler;
  bool increasing = true;
  double worst = 0;
  for (int i = 0; i < kSteps; ++i) {
    const ParticleState next = euler_step(a, 0.01, euler);
    increasing = increasing && energy(next) > energy(euler);
    euler = next;
    cromer = euler_cromer_step(a, 0.01, cromer);
    worst = std::max(worst, rel_err(energy(cromer), 0.5));
  }
  return {increasing && worst < 0.02,
          fmt("Euler E strictly increasing: %s, final %.4f J; Euler-Cromer max deviation %.3f%%",
              increasing ? "yes" : "no", energy(euler), 100 * worst)};
}

// --- 4 ---------------------------------------------------------------------

double growth_error(const EvolutionMethod<double>& method, double dt) {
  const DifferentialEquation<double> de = [](double y) { return y; };
  const auto n = static_cast<std::size_t>(std::lround(1.0 / dt));
  double y = 1;
  for (std::size_t i = 0; i < n; ++i) y = method(de, dt, y);
  return std::abs(y - std::numbers::e);
}

Outcome convergence_orders() {
  const double dts[] = {1e-2, 5e-3, 2.5e-3};
  bool ok = true;
  std::string detail;
  const std::pair<const char*, EvolutionMethod<double>> methods[] = {
      {"Euler", euler_method<double>}, {"RK4", rk4_method<double>}};
  const double targets[] = {1.0, 4.0};
  const double tols[] = {0.1, 0.2};
  for (int m = 0; m < 2; ++m) {
    detail += methods[m].first;
    for (int i = 0; i + 1 < 3; ++i) {
      const double order =
          std::log2(growth_error(methods[m].second, dts[i]) / growth_error(methods[m].second, dts[i + 1]));
      ok = ok && std::abs(order - targets[m]) <= tols[m];
      detail += fmt(" %.3f", order);
    }
    detail += m == 0 ? "; " : "";
  }
  return {ok, detail};
}

// --- 5 ---------------------------------------------------------------------

Outcome circular_orbit() {
  const double r0 = 7e6;
  const double v0 = std::sqrt(kEarthGM / r0);
  const double period = 2 * std::numbers::pi * std::sqrt(r0 * r0 * r0 / kEarthGM);
  const auto steps = static_cast<std::size_t>(std::ceil(period));
  double drift = 0;
  std::size_t seen = 0;
  for (const ParticleState& s : solve_states(satellite_accel, 1.0, {0, vec(r0, 0, 0), vec(0, v0, 0)})) {
    drift = std::max(drift, rel_err(magnitude(s.r), r0));
    if (seen++ == steps) break;
  }
  return {drift < 1e-3, fmt("period %.1f s, max radius drift %.4f%%", period, 100 * drift)};
}

// --- 6 ---------------------------------------------------------------------

Outcome loop_field_oracle() {
  const auto b = b_field_from_line_current(1.0, circular_loop(1.0), 1000);
  const double mu0 = 4 * std::numbers::pi * kBiotSavartConstant;
  double worst = 0;
  for (double z : {0.0, 0.5, 1.0, 2.0}) {
    const double want = mu0 / (2 * std::pow(1 + z * z, 1.5));
    worst = std::max(worst, rel_err(b(cart(0, 0, z)).z, want));
  }
  const double center = b(origin).z;
  const double center_err = rel_err(center, 6.28319e-7);
  return {worst < 1e-3 && center_err < 1e-5,
          fmt("max on-axis rel error %.2e; center %.9g T", worst, center)};
}

// --- 7 ---------------------------------------------------------------------

Outcome line_field_oracle() {
  const double lambda = 1e-9, len = 1;
  const auto e = e_field_from_line_charge([=](const Position&) { return lambda; }, line_segment(len), 1000);
  double worst = 0, worst_transverse = 0;
  for (double d : {0.5, 1.0, 2.0}) {
    const double want = kCoulombConstant * lambda * len / (d * std::sqrt(d * d + len * len / 4));
    const Vec3 got = e(cart(d, 0, 0));
    worst = std::max(worst, rel_err(got.x, want));
    worst_transverse = std::max(worst_transverse, std::hypot(got.y, got.z) / std::abs(got.x));
  }
  return {worst < 1e-3 && worst_transverse < 1e-12,
          fmt("max rel error %.2e; transverse/main %.2e", worst, worst_transverse)};
}

// --- 8 ---------------------------------------------------------------------

Outcome nbody_consistency() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coord(-1e11, 1e11);
  std::uniform_real_distribution<double> log_mass(20, 30);
  double worst_momentum = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> masses;
    SystemState s;
    for (int i = 0; i < 3; ++i) {
      masses.push_back(std::pow(10.0, log_mass(rng)));
      s.bodies.push_back({vec(coord(rng), coord(rng), coord(rng)), zero_v});
    }
    const auto acc = gravity_accel(masses)(s);
    Vec3 total = zero_v;
    double scale = 0;
    for (int i = 0; i < 3; ++i) {
      total += masses[i] * acc[i];
      scale += masses[i] * magnitude(acc[i]);
    }
    worst_momentum = std::max(worst_momentum, magnitude(total) / scale);
  }

  double worst_reduction = 0;
  std::uniform_real_distribution<double> orbit(-4e7, 4e7);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 r = vec(orbit(rng), orbit(rng), orbit(rng));
    const SystemState pair{0, {{zero_v, zero_v}, {r, zero_v}}};
    const Vec3 a_pair = gravity_accel({kEarthMass, 1.0})(pair)[1];
    const Vec3 a_sat = satellite_accel({0, r, zero_v});
    worst_reduction = std::max(worst_reduction, magnitude(a_pair - a_sat) / magnitude(a_sat));
  }
  return {worst_momentum < 1e-9 && worst_reduction < 1e-12,
          fmt("max |sum m a| / sum |m a| %.2e; two-body vs satellite %.2e", worst_momentum,
              worst_reduction)};
}

// --- 9 ---------------------------------------------------------------------

Outcome quadrature_convergence() {
  const auto center_b = [](int n) {
    return b_field_from_line_current(1.0, circular_loop(1.0), n)(origin).z;
  };
  bool ok = true;
  std::string detail = "ratios";
  for (int n : {250, 500, 1000}) {
    const double i1 = center_b(n), i2 = center_b(2 * n), i4 = center_b(4 * n);
    const double ratio = std::abs(i1 - i2) / std::abs(i2 - i4);
    ok = ok && std::abs(ratio - 4) <= 1.0;
    detail += fmt(" n=%d: %.4f", n, ratio);
  }
  return {ok, detail};
}

// --- 10 --------------------------------------------------------------------

Outcome cli_contract() {
  using testing::run_cli;
  using testing::split_lines;
  std::vector<std::string> problems;

  for (const ScenarioInfo& info : scenario_registry()) {
    for (Method m : info.methods) {
      const std::vector<std::string> args{"simulate", info.name, "--steps", "25", "--method",
                                          std::string(method_name(m))};
      const auto first = run_cli(args);
      const auto second = run_cli(args);
      if (first.exit_code != 0 || split_lines(first.out).size() != 27)
        problems.push_back(info.name + "/" + std::string(method_name(m)));
      if (first.out != second.out) problems.push_back("nondeterministic " + info.name);
    }
  }

  for (const char* steps : {"0", "1", "7", "500"}) {
    const auto r = run_cli({"simulate", "ddho", "--steps", steps});
    if (split_lines(r.out).size() != static_cast<std::size_t>(std::stoi(steps)) + 2)
      problems.push_back(std::string("row count for --steps ") + steps);
  }

  const auto path = testing::scratch_path("accept.csv");
  const auto a = run_cli({"simulate", "three-body", "--out", path.string()});
  const std::string first_file = testing::slurp(path);
  const auto b = run_cli({"simulate", "three-body", "--out", path.string()});
  if (a.exit_code != 0 || b.exit_code != 0 || first_file != testing::slurp(path) || first_file.empty())
    problems.push_back("file output not byte-identical");
  std::filesystem::remove(path);

  const std::pair<std::vector<std::string>, int> codes[] = {
      {{"simulate", "sho"}, 0},
      {{"field", "b-loop", "--at", "0,0,0"}, 0},
      {{"simulate", "no-such-scenario"}, 2},
      {{"simulate", "sho", "--no-such-flag", "1"}, 2},
      {{"simulate", "sho", "--dt", "0"}, 2},
      {{"simulate", "pendulum", "--method", "euler-cromer"}, 2},
      {{"field", "b-loop", "--at", "1,2"}, 2},
      {{"field", "e-line", "--at", "0,0,0"}, 3},
      {{"grid", "b-loop", "--x", "0,1,2", "--y", "0,0,1", "--z", "0,0,1"}, 3},
  };
  for (const auto& [args, want] : codes) {
    const int got = run_cli(args).exit_code;
    if (got != want) {
      std::string joined;
      for (const auto& s : args) joined += " " + s;
      problems.push_back(fmt("exit %d (want %d) for%s", got, want, joined.c_str()));
    }
  }

  std::string detail = problems.empty() ? "all checks passed" : "";
  for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  return {problems.empty(), detail};
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "vector algebra invariants", 5, vector_invariants},
      {2, "driven oscillator off resonance stays bounded", 1, driven_oscillator_bounded},
      {3, "Euler vs Euler-Cromer energy on the SHO", 1, symplectic_contrast},
      {4, "convergence orders on y' = y", 1, convergence_orders},
      {5, "circular orbit radius drift", 1, circular_orbit},
      {6, "current loop on-axis B", 1, loop_field_oracle},
      {7, "finite line charge E", 0, line_field_oracle},
      {8, "pairwise gravity consistency", 0, nbody_consistency},
      {9, "midpoint quadrature convergence", 0, quadrature_convergence},
      {10, "CLI contract", 10, cli_contract},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
    const bool ok = out.ok && in_time;
    if (!ok) ++failed;
    std::string timing = fmt("%.3f s", secs);
    if (c.time_limit_s > 0) timing += fmt(" (limit %g s)", c.time_limit_s);
    std::printf("%s %2d %s: %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.title, out.detail.c_str(),
                timing.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
