#pragma once

// Parametrized curves, scalar and vector fields, line integrals over curves,
// and the electric/magnetic fields of line charges and line currents.

#include <concepts>
#include <functional>
#include <type_traits>
#include <utility>

#include "physkit/errors.hpp"
#include "physkit/linalg.hpp"

namespace physkit {

inline constexpr int kDefaultIntervals = 1000;
inline constexpr double kCoulombConstant = 9e9;     // 1 / (4 pi epsilon0), N m^2 / C^2
inline constexpr double kBiotSavartConstant = 1e-7;  // mu0 / (4 pi), T m / A
inline constexpr double kSourceExclusionDistance = 1e-12;  // m

/// A parametrized path with parameter bounds start < end.
class Curve {
 public:
  using Func = std::function<Position(double)>;

  Curve(Func func, double start, double end);

  Position operator()(double t) const { return func_(t); }
  double start() const { return start_; }
  double end() const { return end_; }

  /// The same curve translated by `offset`.
  Curve shifted(const Vec3& offset) const;

 private:
  Func func_;
  double start_;
  double end_;
};

using ScalarField = std::function<double(const Position&)>;
using VectorField = std::function<Vec3(const Position&)>;
template <class V>
using Field = std::function<V(const Position&)>;

using Current = double;  // A

/// Counterclockwise (seen from +z) loop of the given radius in the xy-plane,
/// parameters [0, 2 pi].
Curve circular_loop(double radius);

/// Straight segment along z from (0, 0, -l/2) to (0, 0, l/2).
Curve line_segment(double length);

/// Splits the parameter range into `n` equal pieces and sums
/// f(midpoint) * |chord| over them. Works for any field whose values form a
/// vector space (reals, Vec3).
template <class F>
  requires std::invocable<const F&, const Position&>
auto simple_line_integral(int n, const F& f, const Curve& c) {
  using V = std::decay_t<std::invoke_result_t<const F&, const Position&>>;
  static_assert(VectorSpace<V>, "field values must form a vector space");
  if (n < 1) throw ContractError("line integral needs at least one interval");

  const double step = (c.end() - c.start()) / n;
  V acc = additive_zero<V>();
  Position prev = c(c.start());
  for (int i = 0; i < n; ++i) {
    const Position next = c(i + 1 == n ? c.end() : c.start() + (i + 1) * step);
    const Position mid = c(c.start() + (i + 0.5) * step);
    acc = acc + f(mid) * magnitude(displacement(prev, next));
    prev = next;
  }
  return acc;
}

/// Same partition as simple_line_integral, accumulating f(midpoint) x chord,
/// where the chord is the vector between consecutive partition points.
Vec3 crossed_line_integral(int n, const VectorField& f, const Curve& c);

/// Distance from `p` to the curve: coarse sampling at 2n+1 parameters
/// followed by golden-section refinement around close local minima.
double distance_to_curve(const Curve& c, const Position& p, int n = kDefaultIntervals);

/// Electric field of charge density `lambda` spread along `c`. Evaluating the
/// returned field within kSourceExclusionDistance of the curve throws
/// DomainError("field point on source").
VectorField e_field_from_line_charge(ScalarField lambda, Curve c, int intervals = kDefaultIntervals);

/// Magnetic field of current `i` flowing along `c` in the direction of
/// increasing parameter. Same singularity policy as the electric field.
VectorField b_field_from_line_current(Current i, Curve c, int intervals = kDefaultIntervals);

}  // namespace physkit
