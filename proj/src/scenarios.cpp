#include "physkit/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "physkit/errors.hpp"

namespace physkit {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Euler: return "euler";
    case Method::EulerCromer: return "euler-cromer";
    case Method::Rk4: return "rk4";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Euler, Method::EulerCromer, Method::Rk4}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool ScenarioInfo::supports(Method m) const {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

const ParamSpec* ScenarioInfo::find_param(std::string_view param) const {
  for (const ParamSpec& p : params) {
    if (p.name == param) return &p;
  }
  return nullptr;
}

namespace {

double get(const ParamValues& values, std::string_view name, double fallback) {
  auto it = values.find(name);
  return it == values.end() ? fallback : it->second;
}

double positive(const ParamValues& values, std::string_view name, double fallback) {
  const double v = get(values, name, fallback);
  if (!(v > 0.0)) throw ContractError("--" + std::string(name) + " must be positive");
  return v;
}

long long whole(const ParamValues& values, std::string_view name, double fallback, long long lo,
                long long hi) {
  const double v = get(values, name, fallback);
  if (v != std::floor(v) || v < static_cast<double>(lo) || v > static_cast<double>(hi)) {
    throw ContractError("--" + std::string(name) + " must be an integer in [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<long long>(v);
}

Problem build_sho(const ParamValues& p) {
  const double k = positive(p, "k", 1.0);
  const double mass = positive(p, "mass", 1.0);
  return ParticleProblem{harmonic_accel(k, mass), {0.0, vec(get(p, "x0", 1.0), 0, 0), zero_v}};
}

Problem build_ddho(const ParamValues& p) {
  return ParticleProblem{
      damped_driven_osc(get(p, "beta", 0.0), get(p, "amp", 1.0), get(p, "omega", 0.7)),
      {0.0, vec(1, 0, 0), vec(0, 0, 0)}};
}

Problem build_satellite(const ParamValues& p) {
  const double r0 = positive(p, "r0", 7e6);
  const double v0 = get(p, "v0", std::sqrt(kEarthGM / r0));
  return ParticleProblem{satellite_accel, {0.0, vec(r0, 0, 0), vec(0, v0, 0)}};
}

Problem build_pendulum(const ParamValues& p) {
  const double g = positive(p, "g", 9.8);
  const double length = positive(p, "length", 1.0);
  return AngularProblem{pendulum_deriv(g, length),
                        {0.0, get(p, "theta0", 0.1), get(p, "omega0", 0.0)}};
}

Problem build_three_body(const ParamValues&) {
  const double v_earth = std::sqrt(kGravitationalConstant * kSunMass / kAstronomicalUnit);
  const double v_moon = v_earth + std::sqrt(kGravitationalConstant * kEarthMassSEM / kEarthMoonDistance);
  // Sun recoils so the total momentum is zero.
  const double v_sun = -(kEarthMassSEM * v_earth + kMoonMass * v_moon) / kSunMass;
  SystemState s{0.0,
                {{zero_v, vec(0, v_sun, 0)},
                 {vec(kAstronomicalUnit, 0, 0), vec(0, v_earth, 0)},
                 {vec(kAstronomicalUnit + kEarthMoonDistance, 0, 0), vec(0, v_moon, 0)}}};
  return SystemProblem{gravity_accel({kSunMass, kEarthMassSEM, kMoonMass}), std::move(s)};
}

Problem build_spring_chain(const ParamValues& p) {
  const long long n = whole(p, "n", 100, 1, 100000);
  const double k = positive(p, "k", 1.0);
  const double spacing = positive(p, "spacing", 1.0);
  const double mass = positive(p, "mass", 1.0);
  const double amp = get(p, "amp", 0.1);
  const long long mode = whole(p, "mode", 1, 1, n);
  const bool transverse = whole(p, "transverse", 0, 0, 1) == 1;
  const bool fixed_ends = whole(p, "fixed-ends", 1, 0, 1) == 1;

  SystemState s{0.0, {}};
  s.bodies.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const double offset =
        amp * std::sin(static_cast<double>(mode) * std::numbers::pi * static_cast<double>(i + 1) /
                       static_cast<double>(n + 1));
    Vec3 r = vec(static_cast<double>(i + 1) * spacing, 0, 0);
    r += transverse ? vec(0, offset, 0) : vec(offset, 0, 0);
    s.bodies.push_back({r, zero_v});
  }
  return SystemProblem{spring_chain_accel(k, spacing, mass, fixed_ends), std::move(s)};
}

const std::vector<Method> kAllMethods = {Method::Euler, Method::EulerCromer, Method::Rk4};

std::vector<ScenarioInfo> make_registry() {
  return {
      {"sho", "undamped harmonic oscillator a = -(k/m) r, released from rest at x0",
       StateKind::Particle, 0.01, 1000, Method::EulerCromer, kAllMethods,
       {{"k", 1.0, "spring constant (N/m)"},
        {"mass", 1.0, "mass (kg)"},
        {"x0", 1.0, "initial x displacement (m)"}},
       build_sho},
      {"ddho", "damped driven oscillator (unit mass and spring) from (0, (1,0,0), (0,0,0))",
       StateKind::Particle, 0.01, 1000, Method::EulerCromer, kAllMethods,
       {{"beta", 0.0, "damping constant (kg/s)"},
        {"amp", 1.0, "drive amplitude (N)"},
        {"omega", 0.7, "drive angular frequency (rad/s)"}},
       build_ddho},
      {"satellite", "satellite around a fixed Earth, starting at (r0,0,0) moving along +y",
       StateKind::Particle, 1.0, 5828, Method::EulerCromer, kAllMethods,
       {{"r0", 7e6, "initial orbital radius (m)"},
        {"v0", std::nullopt, "initial speed (m/s); default is the circular speed sqrt(GM/r0)"}},
       build_satellite},
      {"pendulum", "point pendulum theta'' = -(g/L) sin theta", StateKind::Angular, 0.001, 5000,
       Method::Rk4, {Method::Euler, Method::Rk4},
       {{"g", 9.8, "gravitational acceleration (m/s^2)"},
        {"length", 1.0, "pendulum length (m)"},
        {"theta0", 0.1, "initial angle (rad)"},
        {"omega0", 0.0, "initial angular velocity (rad/s)"}},
       build_pendulum},
      {"three-body",
       "Sun, Earth and Moon under mutual gravitation; illustrative circular-orbit seed values",
       StateKind::System, 3600.0, 8766, Method::EulerCromer, kAllMethods, {}, build_three_body},
      {"spring-chain",
       "chain of point masses joined by Hooke springs, seeded with one standing-wave mode",
       StateKind::System, 0.01, 1000, Method::EulerCromer, kAllMethods,
       {{"n", 100.0, "number of masses"},
        {"k", 1.0, "spring constant (N/m)"},
        {"spacing", 1.0, "natural spring length and lattice spacing (m)"},
        {"mass", 1.0, "mass of each body (kg)"},
        {"amp", 0.1, "initial mode amplitude (m)"},
        {"mode", 1.0, "standing-wave mode number"},
        {"transverse", 0.0, "1 for displacement along y, 0 for along the chain"},
        {"fixed-ends", 1.0, "1 to anchor both ends, 0 for free ends"}},
       build_spring_chain},
  };
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> registry = make_registry();
  return registry;
}

const ScenarioInfo* find_scenario(std::string_view name) {
  for (const ScenarioInfo& s : scenario_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace physkit
