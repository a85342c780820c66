#pragma once

// Acceleration functions, the multi-particle system state, and trajectory
// post-processing for the built-in physical scenarios.

#include <cstddef>
#include <functional>
#include <ranges>
#include <utility>
#include <vector>

#include "physkit/linalg.hpp"
#include "physkit/solver.hpp"

namespace physkit {

inline constexpr double kGravitationalConstant = 6.67e-11;  // N m^2 / kg^2
inline constexpr double kEarthMass = 5.98e24;               // kg
inline constexpr double kEarthGM = kGravitationalConstant * kEarthMass;

// Pairwise separations below this are treated as a collision.
inline constexpr double kGravitySingularityDistance = 1e-6;  // m

// ---------------------------------------------------------------------------
// Single-particle accelerations.

/// Inverse-square attraction toward a fixed Earth at the origin. Depends
/// only on displacement. Throws DomainError when r is the zero vector.
Vec3 satellite_accel(const ParticleState& s);

/// Unit mass on a unit spring, with linear damping `beta` (kg/s) and a drive
/// `drive_amp * cos(omega * t)` (N) along x.
AccelerationFunction damped_driven_osc(double beta, double drive_amp, double omega);

/// a = -(k / mass) r.
AccelerationFunction harmonic_accel(double k, double mass);

// ---------------------------------------------------------------------------
// Multi-particle systems.

struct BodyState {
  Vec3 r;
  Vec3 v;

  friend constexpr bool operator==(const BodyState&, const BodyState&) = default;
};

struct SystemState {
  double t = 0.0;
  std::vector<BodyState> bodies;

  friend bool operator==(const SystemState&, const SystemState&) = default;
};

struct BodyRate {
  Vec3 dr;
  Vec3 dv;

  friend constexpr bool operator==(const BodyRate&, const BodyRate&) = default;
};

/// Time derivative of a SystemState. All binary operations require equal
/// body counts and throw ContractError otherwise.
struct SystemStateDeriv {
  double dt = 0.0;
  std::vector<BodyRate> rates;

  static SystemStateDeriv zero(std::size_t body_count);

  friend bool operator==(const SystemStateDeriv&, const SystemStateDeriv&) = default;
};

SystemStateDeriv operator+(const SystemStateDeriv& a, const SystemStateDeriv& b);
SystemStateDeriv operator-(const SystemStateDeriv& a, const SystemStateDeriv& b);
SystemStateDeriv operator-(const SystemStateDeriv& a);
SystemStateDeriv operator*(double s, const SystemStateDeriv& a);
SystemStateDeriv operator*(const SystemStateDeriv& a, double s);

template <>
struct StateSpaceTraits<SystemState> {
  using diff_type = SystemStateDeriv;
  static SystemState shift(const SystemState& s, const SystemStateDeriv& d);
};

/// One acceleration per body, in body order.
using SystemAccFunc = std::function<std::vector<Vec3>(const SystemState&)>;

/// Per body: v' = v + a dt, r' = r + v' dt. Throws ContractError when the
/// acceleration list length differs from the body count.
SystemState euler_cromer_system_step(const SystemAccFunc& a, double dt, const SystemState& s);

/// (t, [(r, v)]) -> (1, [(v, a)]), for use with the generic methods.
DifferentialEquation<SystemState> system_diff_eq(SystemAccFunc a);

/// Mutual Newtonian gravitation, G = kGravitationalConstant. Masses must be
/// positive; the state must hold exactly masses.size() bodies. Throws
/// DomainError("gravitational singularity") for near-coincident bodies.
SystemAccFunc gravity_accel(std::vector<double> masses);

/// Nearest-neighbour Hooke springs of natural length `spacing`. The
/// equilibrium lattice puts body i at ((i + 1) * spacing, 0, 0); with
/// `fixed_ends` the chain is tied to stationary anchors at the origin and at
/// ((N + 1) * spacing, 0, 0).
SystemAccFunc spring_chain_accel(double k, double spacing, double mass, bool fixed_ends);

// ---------------------------------------------------------------------------
// Pendulum.

struct AngularState {
  double t = 0.0;
  double theta = 0.0;  // rad
  double omega = 0.0;  // rad/s

  friend constexpr bool operator==(const AngularState&, const AngularState&) = default;
};

struct AngularStateDeriv {
  double dt = 0.0;
  double dtheta = 0.0;
  double domega = 0.0;

  friend constexpr bool operator==(const AngularStateDeriv&, const AngularStateDeriv&) = default;
};

constexpr AngularStateDeriv operator+(const AngularStateDeriv& a, const AngularStateDeriv& b) {
  return {a.dt + b.dt, a.dtheta + b.dtheta, a.domega + b.domega};
}
constexpr AngularStateDeriv operator-(const AngularStateDeriv& a, const AngularStateDeriv& b) {
  return {a.dt - b.dt, a.dtheta - b.dtheta, a.domega - b.domega};
}
constexpr AngularStateDeriv operator-(const AngularStateDeriv& a) {
  return {-a.dt, -a.dtheta, -a.domega};
}
constexpr AngularStateDeriv operator*(double s, const AngularStateDeriv& a) {
  return {s * a.dt, s * a.dtheta, s * a.domega};
}
constexpr AngularStateDeriv operator*(const AngularStateDeriv& a, double s) { return s * a; }

template <>
struct VectorSpaceTraits<AngularStateDeriv> {
  static constexpr AngularStateDeriv zero() { return {}; }
};

template <>
struct StateSpaceTraits<AngularState> {
  using diff_type = AngularStateDeriv;
  static AngularState shift(const AngularState& s, const AngularStateDeriv& d) {
    return {s.t + d.dt, s.theta + d.dtheta, s.omega + d.domega};
  }
};

/// Point pendulum: d(t, theta, omega)/dt = (1, omega, -(g / length) sin theta).
DifferentialEquation<AngularState> pendulum_deriv(double g, double length);

// ---------------------------------------------------------------------------

/// Lazily projects particle states onto (t, x) pairs, preserving order.
template <std::ranges::viewable_range R>
auto tx_pairs(R&& states) {
  return std::views::all(std::forward<R>(states)) |
         std::views::transform([](const ParticleState& s) { return std::pair{s.t, s.r.x}; });
}

}  // namespace physkit
