#include "physkit/mechanics.hpp"

#include <cmath>
#include <string>

#include "physkit/errors.hpp"

namespace physkit {

Vec3 satellite_accel(const ParticleState& s) {
  const double dist = magnitude(s.r);
  if (dist == 0.0) throw DomainError("satellite at origin");
  const Vec3 toward_earth = -s.r / dist;
  return (kEarthGM / (dist * dist)) * toward_earth;
}

AccelerationFunction damped_driven_osc(double beta, double drive_amp, double omega) {
  return [beta, drive_amp, omega](const ParticleState& s) {
    constexpr double mass = 1.0;
    constexpr double k = 1.0;
    const Vec3 force_damp = (-beta) * s.v;
    const Vec3 force_drive = (drive_amp * std::cos(omega * s.t)) * i_hat;
    const Vec3 force_spring = (-k) * s.r;
    return (force_damp + force_drive + force_spring) / mass;
  };
}

AccelerationFunction harmonic_accel(double k, double mass) {
  if (!(k > 0.0) || !(mass > 0.0)) throw ContractError("spring constant and mass must be positive");
  return [k, mass](const ParticleState& s) { return (-k) * s.r / mass; };
}

// ---------------------------------------------------------------------------

namespace {

void require_same_count(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractError("body count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

template <class Op>
SystemStateDeriv zip_rates(const SystemStateDeriv& a, const SystemStateDeriv& b, Op op) {
  require_same_count(a.rates.size(), b.rates.size());
  SystemStateDeriv out;
  out.dt = op(a.dt, b.dt);
  out.rates.reserve(a.rates.size());
  for (std::size_t i = 0; i < a.rates.size(); ++i) {
    out.rates.push_back({op(a.rates[i].dr, b.rates[i].dr), op(a.rates[i].dv, b.rates[i].dv)});
  }
  return out;
}

}  // namespace

SystemStateDeriv SystemStateDeriv::zero(std::size_t body_count) {
  return {0.0, std::vector<BodyRate>(body_count)};
}

SystemStateDeriv operator+(const SystemStateDeriv& a, const SystemStateDeriv& b) {
  return zip_rates(a, b, [](const auto& x, const auto& y) { return x + y; });
}

SystemStateDeriv operator-(const SystemStateDeriv& a, const SystemStateDeriv& b) {
  return zip_rates(a, b, [](const auto& x, const auto& y) { return x - y; });
}

SystemStateDeriv operator-(const SystemStateDeriv& a) { return -1.0 * a; }

SystemStateDeriv operator*(double s, const SystemStateDeriv& a) {
  SystemStateDeriv out{s * a.dt, {}};
  out.rates.reserve(a.rates.size());
  for (const BodyRate& r : a.rates) out.rates.push_back({s * r.dr, s * r.dv});
  return out;
}

SystemStateDeriv operator*(const SystemStateDeriv& a, double s) { return s * a; }

SystemState StateSpaceTraits<SystemState>::shift(const SystemState& s, const SystemStateDeriv& d) {
  require_same_count(s.bodies.size(), d.rates.size());
  SystemState out{s.t + d.dt, {}};
  out.bodies.reserve(s.bodies.size());
  for (std::size_t i = 0; i < s.bodies.size(); ++i) {
    out.bodies.push_back({s.bodies[i].r + d.rates[i].dr, s.bodies[i].v + d.rates[i].dv});
  }
  return out;
}

static std::vector<Vec3> checked_accels(const SystemAccFunc& a, const SystemState& s) {
  std::vector<Vec3> as = a(s);
  if (as.size() != s.bodies.size()) {
    throw ContractError("acceleration function returned " + std::to_string(as.size()) +
                        " values for " + std::to_string(s.bodies.size()) + " bodies");
  }
  return as;
}

SystemState euler_cromer_system_step(const SystemAccFunc& a, double dt, const SystemState& s) {
  const std::vector<Vec3> as = checked_accels(a, s);
  SystemState out{s.t + dt, {}};
  out.bodies.reserve(s.bodies.size());
  for (std::size_t i = 0; i < s.bodies.size(); ++i) {
    const Vec3 v_new = s.bodies[i].v + as[i] * dt;
    out.bodies.push_back({s.bodies[i].r + v_new * dt, v_new});
  }
  return out;
}

DifferentialEquation<SystemState> system_diff_eq(SystemAccFunc a) {
  return [a = std::move(a)](const SystemState& s) {
    const std::vector<Vec3> as = checked_accels(a, s);
    SystemStateDeriv d{1.0, {}};
    d.rates.reserve(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) d.rates.push_back({s.bodies[i].v, as[i]});
    return d;
  };
}

SystemAccFunc gravity_accel(std::vector<double> masses) {
  for (double m : masses) {
    if (!(m > 0.0) || !std::isfinite(m)) throw ContractError("masses must be positive and finite");
  }
  return [masses = std::move(masses)](const SystemState& s) {
    require_same_count(s.bodies.size(), masses.size());
    std::vector<Vec3> out(s.bodies.size());
    for (std::size_t i = 0; i < s.bodies.size(); ++i) {
      Vec3 acc = zero_v;
      for (std::size_t j = 0; j < s.bodies.size(); ++j) {
        if (j == i) continue;
        const Vec3 d = s.bodies[j].r - s.bodies[i].r;
        const double dist = magnitude(d);
        if (dist < kGravitySingularityDistance) throw DomainError("gravitational singularity");
        acc += (kGravitationalConstant * masses[j] / (dist * dist * dist)) * d;
      }
      out[i] = acc;
    }
    return out;
  };
}

SystemAccFunc spring_chain_accel(double k, double spacing, double mass, bool fixed_ends) {
  if (!(k > 0.0) || !(spacing > 0.0) || !(mass > 0.0)) {
    throw ContractError("spring chain needs positive k, spacing and mass");
  }
  return [k, spacing, mass, fixed_ends](const SystemState& s) {
    const std::size_t n = s.bodies.size();
    if (n == 0) throw ContractError("spring chain needs at least one body");

    // Hooke force on a body at `self` from a spring whose other end is `other`.
    auto hooke = [&](const Vec3& self, const Vec3& other) {
      const Vec3 d = other - self;
      const double len = magnitude(d);
      if (len == 0.0) throw DomainError("coincident spring endpoints");
      return (k * (len - spacing) / len) * d;
    };
    const Vec3 left_anchor = zero_v;
    const Vec3 right_anchor = vec(static_cast<double>(n + 1) * spacing, 0.0, 0.0);

    std::vector<Vec3> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec3 force = zero_v;
      const Vec3& r = s.bodies[i].r;
      if (i > 0) {
        force += hooke(r, s.bodies[i - 1].r);
      } else if (fixed_ends) {
        force += hooke(r, left_anchor);
      }
      if (i + 1 < n) {
        force += hooke(r, s.bodies[i + 1].r);
      } else if (fixed_ends) {
        force += hooke(r, right_anchor);
      }
      out[i] = force / mass;
    }
    return out;
  };
}

DifferentialEquation<AngularState> pendulum_deriv(double g, double length) {
  if (!(g > 0.0) || !(length > 0.0)) throw ContractError("pendulum needs positive g and length");
  const double ratio = g / length;
  return [ratio](const AngularState& s) {
    return AngularStateDeriv{1.0, s.omega, -ratio * std::sin(s.theta)};
  };
}

}  // namespace physkit
