#pragma once

// Three-dimensional vectors, positions, and the generic vector-space layer
// used by the integrators and line integrals.

#include <cmath>
#include <concepts>
#include <ranges>
#include <string>
#include <string_view>

namespace physkit {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 vec(double x, double y, double z) { return Vec3{x, y, z}; }

inline constexpr Vec3 zero_v{0.0, 0.0, 0.0};
inline constexpr Vec3 i_hat{1.0, 0.0, 0.0};
inline constexpr Vec3 j_hat{0.0, 1.0, 0.0};
inline constexpr Vec3 k_hat{0.0, 0.0, 1.0};

constexpr double x_comp(const Vec3& v) { return v.x; }
constexpr double y_comp(const Vec3& v) { return v.y; }
constexpr double z_comp(const Vec3& v) { return v.z; }

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }
constexpr Vec3 operator*(double s, const Vec3& v) {
  return {s * v.x, s * v.y, s * v.z};
}
constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }
// Division by zero follows IEEE-754 (no guard in the arithmetic core).
constexpr Vec3 operator/(const Vec3& v, double s) {
  return {v.x / s, v.y / s, v.z / s};
}

constexpr Vec3& operator+=(Vec3& a, const Vec3& b) { return a = a + b; }
constexpr Vec3& operator-=(Vec3& a, const Vec3& b) { return a = a - b; }

constexpr Vec3 negate_v(const Vec3& v) { return -v; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Right-handed: cross(i_hat, j_hat) == k_hat.
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double magnitude(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Left fold of `+` starting from the zero vector.
template <std::ranges::input_range R>
  requires std::convertible_to<std::ranges::range_value_t<R>, Vec3>
constexpr Vec3 sum_v(R&& vs) {
  Vec3 acc = zero_v;
  for (const Vec3& v : vs) acc = acc + v;
  return acc;
}

constexpr Vec3 sum_v(std::initializer_list<Vec3> vs) {
  Vec3 acc = zero_v;
  for (const Vec3& v : vs) acc = acc + v;
  return acc;
}

/// A point in space relative to a fixed (arbitrary) Cartesian origin.
/// Positions cannot be added; use displacement() and shift() instead.
struct Position {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr bool operator==(const Position&, const Position&) = default;
};

constexpr Position cart(double x, double y, double z) { return {x, y, z}; }

inline constexpr Position origin{0.0, 0.0, 0.0};

/// Vector pointing from `from` to `to`.
constexpr Vec3 displacement(const Position& from, const Position& to) {
  return {to.x - from.x, to.y - from.y, to.z - from.z};
}

constexpr Position shift(const Position& p, const Vec3& d) {
  return {p.x + d.x, p.y + d.y, p.z + d.z};
}

// ---------------------------------------------------------------------------
// Generic layer. A vector space here is anything closed under +, -, negation
// and scaling by a real. Types with a fixed shape also specialise
// VectorSpaceTraits to supply their zero element.

template <class V>
concept VectorSpace = std::copy_constructible<V> &&
    requires(const V& a, const V& b, double s) {
      { a + b } -> std::convertible_to<V>;
      { a - b } -> std::convertible_to<V>;
      { -a } -> std::convertible_to<V>;
      { s * a } -> std::convertible_to<V>;
      { a * s } -> std::convertible_to<V>;
    };

template <class V>
struct VectorSpaceTraits;

template <>
struct VectorSpaceTraits<double> {
  static constexpr double zero() { return 0.0; }
};

template <>
struct VectorSpaceTraits<Vec3> {
  static constexpr Vec3 zero() { return zero_v; }
};

template <class V>
constexpr V additive_zero() {
  return VectorSpaceTraits<V>::zero();
}

constexpr double inner(double a, double b) { return a * b; }
constexpr double inner(const Vec3& a, const Vec3& b) { return dot(a, b); }

template <class V>
concept InnerSpace = VectorSpace<V> && requires(const V& a, const V& b) {
  { inner(a, b) } -> std::convertible_to<double>;
};

template <InnerSpace V>
double norm(const V& v) {
  return std::sqrt(inner(v, v));
}

// ---------------------------------------------------------------------------
// Text form `x,y,z` with shortest round-trip decimal components.

std::string format_real(double value);
std::string to_string(const Vec3& v);
std::string to_string(const Position& p);

/// Parses `x,y,z`. Throws ContractError on malformed or non-finite input.
Vec3 parse_vec3(std::string_view text);
Position parse_position(std::string_view text);

}  // namespace physkit
