#include "physkit/solver.hpp"

namespace physkit {

ParticleState euler_step(const AccelerationFunction& a, double dt, const ParticleState& s) {
  return {s.t + dt, s.r + s.v * dt, s.v + a(s) * dt};
}

ParticleState euler_cromer_step(const AccelerationFunction& a, double dt, const ParticleState& s) {
  const Vec3 v_new = s.v + a(s) * dt;
  return {s.t + dt, s.r + v_new * dt, v_new};
}

DifferentialEquation<ParticleState> one_particle_diff_eq(AccelerationFunction a) {
  return [a = std::move(a)](const ParticleState& s) {
    return ParticleStateDeriv{1.0, s.v, a(s)};
  };
}

StateStream<ParticleState> solve_states(AccelerationFunction a, double dt, ParticleState s0) {
  return iterate<ParticleState>(
      [a = std::move(a), dt](const ParticleState& s) { return euler_cromer_step(a, dt, s); },
      s0);
}

}  // namespace physkit
