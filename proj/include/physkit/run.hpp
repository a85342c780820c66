#pragma once

// Scenario runs to CSV, and field point queries and grid sampling.
//
// Errors: ContractError for invalid configuration (unknown names, bad
// values), DomainError for physical singularities met while computing.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "physkit/em.hpp"
#include "physkit/scenarios.hpp"

namespace physkit {

struct RunConfig {
  std::string scenario;
  std::optional<double> dt;         // scenario default when unset
  std::optional<long long> steps;   // scenario default when unset
  std::optional<Method> method;     // scenario default when unset
  ParamValues params;
};

/// Writes the CSV header, then steps + 1 rows (the initial state first).
void simulate(const RunConfig& cfg, std::ostream& out);
std::string simulate_to_string(const RunConfig& cfg);

/// CSV header for a scenario's state space, e.g. `t,x,y,z,vx,vy,vz`.
std::string csv_header(StateKind kind, std::size_t body_count);

enum class FieldKind { ELine, BLoop };

std::optional<FieldKind> parse_field_kind(std::string_view name);
std::string_view field_kind_name(FieldKind kind);

struct FieldConfig {
  FieldKind kind = FieldKind::BLoop;
  // e-line: lambda (C/m, default 1e-9), length (m, default 1).
  // b-loop: current (A, default 1), radius (m, default 1).
  ParamValues params;
  int intervals = kDefaultIntervals;
};

/// Names accepted in FieldConfig::params for `kind`.
std::vector<std::string> field_param_names(FieldKind kind);

VectorField make_field(const FieldConfig& cfg);

Vec3 evaluate_field(const FieldConfig& cfg, const Position& at);

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
};

/// Coordinate of sample `index` along an axis; a single-sample axis sits at min.
double axis_coordinate(const GridAxis& axis, int index);

/// Writes `x,y,z,Fx,Fy,Fz` rows with x slowest and z fastest. Points are
/// evaluated in parallel; row order is fixed. A point on the source raises
/// DomainError naming the first such point in row order.
void sample_field_grid(const FieldConfig& cfg, const std::array<GridAxis, 3>& axes,
                       std::ostream& out);
std::string sample_field_grid_to_string(const FieldConfig& cfg,
                                        const std::array<GridAxis, 3>& axes);

}  // namespace physkit
