#pragma once

// State spaces, differential equations as functions, evolution methods, and
// lazily evaluated solution streams.

#include <cstddef>
#include <functional>
#include <iterator>
#include <memory>
#include <ranges>
#include <utility>
#include <vector>

#include "physkit/linalg.hpp"

namespace physkit {

// ---------------------------------------------------------------------------
// State-space contract. A state type S names its derivative type D (a real
// vector space) and knows how to shift a state by a derivative-scaled step.
// Laws: shift(s, 0) == s and shift(shift(s, a), b) == shift(s, a + b).

template <class S>
struct StateSpaceTraits;

template <class S>
using Diff = typename StateSpaceTraits<S>::diff_type;

template <class S>
concept StateSpace = std::copy_constructible<S> && VectorSpace<Diff<S>> &&
    requires(const S& s, const Diff<S>& d) {
      { StateSpaceTraits<S>::shift(s, d) } -> std::convertible_to<S>;
    };

template <StateSpace S>
S shift_state(const S& s, const Diff<S>& d) {
  return StateSpaceTraits<S>::shift(s, d);
}

template <>
struct StateSpaceTraits<double> {
  using diff_type = double;
  static double shift(double s, double d) { return s + d; }
};

template <>
struct StateSpaceTraits<Vec3> {
  using diff_type = Vec3;
  static Vec3 shift(const Vec3& s, const Vec3& d) { return s + d; }
};

template <>
struct StateSpaceTraits<Position> {
  using diff_type = Vec3;
  static Position shift(const Position& s, const Vec3& d) { return physkit::shift(s, d); }
};

// ---------------------------------------------------------------------------
// Single particle: time, displacement from the origin, velocity.

struct ParticleState {
  double t = 0.0;
  Vec3 r;
  Vec3 v;

  friend constexpr bool operator==(const ParticleState&, const ParticleState&) = default;
};

struct ParticleStateDeriv {
  double dt = 0.0;
  Vec3 dr;
  Vec3 dv;

  friend constexpr bool operator==(const ParticleStateDeriv&, const ParticleStateDeriv&) = default;
};

constexpr ParticleStateDeriv operator+(const ParticleStateDeriv& a, const ParticleStateDeriv& b) {
  return {a.dt + b.dt, a.dr + b.dr, a.dv + b.dv};
}
constexpr ParticleStateDeriv operator-(const ParticleStateDeriv& a, const ParticleStateDeriv& b) {
  return {a.dt - b.dt, a.dr - b.dr, a.dv - b.dv};
}
constexpr ParticleStateDeriv operator-(const ParticleStateDeriv& a) { return {-a.dt, -a.dr, -a.dv}; }
constexpr ParticleStateDeriv operator*(double s, const ParticleStateDeriv& a) {
  return {s * a.dt, s * a.dr, s * a.dv};
}
constexpr ParticleStateDeriv operator*(const ParticleStateDeriv& a, double s) { return s * a; }

template <>
struct VectorSpaceTraits<ParticleStateDeriv> {
  static constexpr ParticleStateDeriv zero() { return {}; }
};

template <>
struct StateSpaceTraits<ParticleState> {
  using diff_type = ParticleStateDeriv;
  static ParticleState shift(const ParticleState& s, const ParticleStateDeriv& d) {
    return {s.t + d.dt, s.r + d.dr, s.v + d.dv};
  }
};

// ---------------------------------------------------------------------------
// Equations and methods.

template <class S>
using DifferentialEquation = std::function<Diff<S>(const S&)>;

/// (equation, timestep, state) -> state advanced by one timestep.
template <class S>
using EvolutionMethod = std::function<S(const DifferentialEquation<S>&, double, const S&)>;

template <class S>
struct InitialValueProblem {
  DifferentialEquation<S> equation;
  S initial;
};

using AccelerationFunction = std::function<Vec3(const ParticleState&)>;

/// Explicit Euler: the position update uses the old velocity.
ParticleState euler_step(const AccelerationFunction& a, double dt, const ParticleState& s);

/// Semi-implicit (symplectic) Euler: velocity first, then position from the
/// new velocity.
ParticleState euler_cromer_step(const AccelerationFunction& a, double dt, const ParticleState& s);

/// (t, r, v) -> (1, v, a(t, r, v)).
DifferentialEquation<ParticleState> one_particle_diff_eq(AccelerationFunction a);

template <StateSpace S>
S euler_method(const DifferentialEquation<S>& de, double dt, const S& s) {
  return shift_state(s, de(s) * dt);
}

/// Classical fixed-step fourth-order Runge-Kutta, written against the
/// state-space contract only.
template <StateSpace S>
S rk4_method(const DifferentialEquation<S>& de, double dt, const S& s) {
  const double half = 0.5 * dt;
  const Diff<S> k1 = de(s);
  const Diff<S> k2 = de(shift_state(s, k1 * half));
  const Diff<S> k3 = de(shift_state(s, k2 * half));
  const Diff<S> k4 = de(shift_state(s, k3 * dt));
  return shift_state(s, (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0));
}

// ---------------------------------------------------------------------------
// Solution streams. Element 0 is the seed; element n+1 is step(element n),
// computed only when the consumer advances. Each begin() restarts from the
// seed, so a stream can be consumed any number of times with identical
// results. A single iterator must not be advanced from two threads at once.

template <class S>
class StateStream : public std::ranges::view_interface<StateStream<S>> {
 public:
  using StepFn = std::function<S(const S&)>;

  class iterator {
   public:
    using iterator_concept = std::input_iterator_tag;
    using value_type = S;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::shared_ptr<const StepFn> step, S current)
        : step_(std::move(step)), current_(std::move(current)) {}

    const S& operator*() const { return current_; }
    const S* operator->() const { return &current_; }

    iterator& operator++() {
      current_ = (*step_)(current_);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator&, std::unreachable_sentinel_t) { return false; }

   private:
    std::shared_ptr<const StepFn> step_;
    S current_{};
  };

  StateStream() = default;
  StateStream(StepFn step, S seed)
      : step_(std::make_shared<const StepFn>(std::move(step))), seed_(std::move(seed)) {}

  iterator begin() const { return iterator(step_, seed_); }
  std::unreachable_sentinel_t end() const { return std::unreachable_sentinel; }

  const S& initial() const { return seed_; }

 private:
  std::shared_ptr<const StepFn> step_;
  S seed_{};
};

template <class S>
StateStream<S> iterate(std::function<S(const S&)> step, S seed) {
  return StateStream<S>(std::move(step), std::move(seed));
}

template <class S>
StateStream<S> step_solution(EvolutionMethod<S> ev, double dt, InitialValueProblem<S> ivp) {
  return iterate<S>(
      [ev = std::move(ev), de = std::move(ivp.equation), dt](const S& s) { return ev(de, dt, s); },
      std::move(ivp.initial));
}

/// Euler-Cromer trajectory for a single particle.
StateStream<ParticleState> solve_states(AccelerationFunction a, double dt, ParticleState s0);

/// First `count` elements of a stream.
template <std::ranges::input_range R>
std::vector<std::ranges::range_value_t<R>> take_n(R&& stream, std::size_t count) {
  std::vector<std::ranges::range_value_t<R>> out;
  out.reserve(count);
  auto it = std::ranges::begin(stream);
  for (std::size_t i = 0; i < count; ++i, ++it) {
    out.push_back(*it);
    if (i + 1 == count) break;
  }
  return out;
}

}  // namespace physkit
