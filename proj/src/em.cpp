#include "physkit/em.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace physkit {

Curve::Curve(Func func, double start, double end)
    : func_(std::move(func)), start_(start), end_(end) {
  if (!func_) throw ContractError("curve function is empty");
  if (!std::isfinite(start) || !std::isfinite(end) || !(start < end)) {
    throw ContractError("curve parameters must satisfy start < end");
  }
}

Curve Curve::shifted(const Vec3& offset) const {
  return Curve([f = func_, offset](double t) { return shift(f(t), offset); }, start_, end_);
}

Curve circular_loop(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("loop radius must be positive");
  return Curve(
      [radius](double t) { return cart(radius * std::cos(t), radius * std::sin(t), 0.0); }, 0.0,
      2.0 * std::numbers::pi);
}

Curve line_segment(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("segment length must be positive");
  return Curve([](double t) { return cart(0.0, 0.0, t); }, -length / 2.0, length / 2.0);
}

Vec3 crossed_line_integral(int n, const VectorField& f, const Curve& c) {
  if (n < 1) throw ContractError("line integral needs at least one interval");
  const double step = (c.end() - c.start()) / n;
  Vec3 acc = zero_v;
  Position prev = c(c.start());
  for (int i = 0; i < n; ++i) {
    const Position next = c(i + 1 == n ? c.end() : c.start() + (i + 1) * step);
    const Position mid = c(c.start() + (i + 0.5) * step);
    acc += cross(f(mid), displacement(prev, next));
    prev = next;
  }
  return acc;
}

namespace {

double golden_section_min(const Curve& c, const Position& p, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  auto dist = [&](double t) { return magnitude(displacement(c(t), p)); };
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = dist(x1), f2 = dist(x2);
  double best = std::min({dist(lo), dist(hi), f1, f2});
  for (int iter = 0; iter < 200 && b - a > 0.0; ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      if (!(x1 > a && x1 < b)) break;
      f1 = dist(x1);
      best = std::min(best, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      if (!(x2 > a && x2 < b)) break;
      f2 = dist(x2);
      best = std::min(best, f2);
    }
  }
  return best;
}

}  // namespace

double distance_to_curve(const Curve& c, const Position& p, int n) {
  if (n < 1) throw ContractError("distance_to_curve needs at least one interval");
  const int samples = 2 * n + 1;
  const double step = (c.end() - c.start()) / (samples - 1);
  auto param = [&](int k) { return k + 1 == samples ? c.end() : c.start() + k * step; };

  std::vector<Position> pts(samples);
  std::vector<double> dists(samples);
  double max_gap = 0.0;
  for (int k = 0; k < samples; ++k) {
    pts[k] = c(param(k));
    dists[k] = magnitude(displacement(pts[k], p));
    if (k > 0) max_gap = std::max(max_gap, magnitude(displacement(pts[k - 1], pts[k])));
  }

  double best = *std::min_element(dists.begin(), dists.end());
  // Only local minima that could hide a closer point between samples need
  // refinement.
  const double refine_below = 2.0 * max_gap;
  for (int k = 0; k < samples; ++k) {
    const bool left_ok = k == 0 || dists[k] <= dists[k - 1];
    const bool right_ok = k + 1 == samples || dists[k] <= dists[k + 1];
    if (!left_ok || !right_ok || dists[k] > refine_below) continue;
    const double lo = param(std::max(k - 1, 0));
    const double hi = param(std::min(k + 1, samples - 1));
    best = std::min(best, golden_section_min(c, p, lo, hi));
  }
  return best;
}

namespace {

void require_off_source(const Curve& c, const Position& r, int intervals) {
  if (distance_to_curve(c, r, intervals) < kSourceExclusionDistance) {
    throw DomainError("field point on source");
  }
}

}  // namespace

VectorField e_field_from_line_charge(ScalarField lambda, Curve c, int intervals) {
  if (!lambda) throw ContractError("charge density is empty");
  if (intervals < 1) throw ContractError("field needs at least one interval");
  return [lambda = std::move(lambda), c = std::move(c), intervals](const Position& r) {
    require_off_source(c, r, intervals);
    auto integrand = [&](const Position& r_src) {
      const Vec3 d = displacement(r_src, r);
      const double dist = magnitude(d);
      return lambda(r_src) * d / (dist * dist * dist);
    };
    return kCoulombConstant * simple_line_integral(intervals, integrand, c);
  };
}

VectorField b_field_from_line_current(Current i, Curve c, int intervals) {
  if (!std::isfinite(i)) throw ContractError("current must be finite");
  if (intervals < 1) throw ContractError("field needs at least one interval");
  return [i, c = std::move(c), intervals](const Position& r) {
    require_off_source(c, r, intervals);
    // crossed_line_integral computes F x dl; the sign flip turns it into
    // dl x (r - r').
    VectorField integrand = [&](const Position& r_src) {
      const Vec3 d = displacement(r_src, r);
      const double dist = magnitude(d);
      return (-i) * d / (dist * dist * dist);
    };
    return kBiotSavartConstant * crossed_line_integral(intervals, integrand, c);
  };
}

}  // namespace physkit
