#include "physkit/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "physkit/errors.hpp"

namespace physkit {

namespace {

void append_values(std::string& line, std::initializer_list<double> values) {
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_real(v);
  }
}

std::string particle_row(const ParticleState& s) {
  std::string line;
  append_values(line, {s.t, s.r.x, s.r.y, s.r.z, s.v.x, s.v.y, s.v.z});
  return line;
}

std::string angular_row(const AngularState& s) {
  std::string line;
  append_values(line, {s.t, s.theta, s.omega});
  return line;
}

std::string system_row(const SystemState& s) {
  std::string line = format_real(s.t);
  for (const BodyState& b : s.bodies) append_values(line, {b.r.x, b.r.y, b.r.z, b.v.x, b.v.y, b.v.z});
  return line;
}

template <class S, class RowFn>
void write_rows(const StateStream<S>& stream, long long steps, std::ostream& out, RowFn row) {
  long long written = 0;
  for (auto it = stream.begin();; ++it) {
    out << row(*it) << '\n';
    if (++written > steps) break;
  }
}

template <class S>
StateStream<S> generic_stream(Method method, double dt, InitialValueProblem<S> ivp) {
  if (method == Method::Rk4) return step_solution<S>(rk4_method<S>, dt, std::move(ivp));
  return step_solution<S>(euler_method<S>, dt, std::move(ivp));
}

void validate_params(const ScenarioInfo& info, const ParamValues& params) {
  for (const auto& [name, value] : params) {
    if (info.find_param(name) == nullptr) {
      throw ContractError("unknown parameter --" + name + " for scenario '" + info.name + "'");
    }
    if (!std::isfinite(value)) throw ContractError("parameter --" + name + " must be finite");
  }
}

}  // namespace

std::string csv_header(StateKind kind, std::size_t body_count) {
  switch (kind) {
    case StateKind::Particle: return "t,x,y,z,vx,vy,vz";
    case StateKind::Angular: return "t,theta,omega";
    case StateKind::System: break;
  }
  std::string header = "t";
  for (std::size_t i = 1; i <= body_count; ++i) {
    const std::string n = std::to_string(i);
    for (const char* col : {"x", "y", "z", "vx", "vy", "vz"}) header += "," + (col + n);
  }
  return header;
}

void simulate(const RunConfig& cfg, std::ostream& out) {
  const ScenarioInfo* info = find_scenario(cfg.scenario);
  if (info == nullptr) throw ContractError("unknown scenario '" + cfg.scenario + "'");

  const double dt = cfg.dt.value_or(info->default_dt);
  const long long steps = cfg.steps.value_or(info->default_steps);
  const Method method = cfg.method.value_or(info->default_method);
  if (!std::isfinite(dt) || !(dt > 0.0)) throw ContractError("--dt must be positive and finite");
  if (steps < 0) throw ContractError("--steps must be non-negative");
  if (!info->supports(method)) {
    throw ContractError("method '" + std::string(method_name(method)) +
                        "' is not available for scenario '" + info->name + "'");
  }
  validate_params(*info, cfg.params);

  const Problem problem = info->build(cfg.params);

  if (const auto* p = std::get_if<ParticleProblem>(&problem)) {
    out << csv_header(StateKind::Particle, 1) << '\n';
    const StateStream<ParticleState> stream =
        method == Method::EulerCromer
            ? solve_states(p->accel, dt, p->initial)
            : generic_stream<ParticleState>(method, dt, {one_particle_diff_eq(p->accel), p->initial});
    write_rows(stream, steps, out, particle_row);
  } else if (const auto* p = std::get_if<AngularProblem>(&problem)) {
    out << csv_header(StateKind::Angular, 1) << '\n';
    write_rows(generic_stream<AngularState>(method, dt, {p->equation, p->initial}), steps, out,
               angular_row);
  } else {
    const auto& sys = std::get<SystemProblem>(problem);
    out << csv_header(StateKind::System, sys.initial.bodies.size()) << '\n';
    const StateStream<SystemState> stream =
        method == Method::EulerCromer
            ? iterate<SystemState>(
                  [a = sys.accel, dt](const SystemState& s) {
                    return euler_cromer_system_step(a, dt, s);
                  },
                  sys.initial)
            : generic_stream<SystemState>(method, dt, {system_diff_eq(sys.accel), sys.initial});
    write_rows(stream, steps, out, system_row);
  }
}

std::string simulate_to_string(const RunConfig& cfg) {
  std::ostringstream out;
  simulate(cfg, out);
  return std::move(out).str();
}

// ---------------------------------------------------------------------------

std::optional<FieldKind> parse_field_kind(std::string_view name) {
  if (name == "e-line") return FieldKind::ELine;
  if (name == "b-loop") return FieldKind::BLoop;
  return std::nullopt;
}

std::string_view field_kind_name(FieldKind kind) {
  return kind == FieldKind::ELine ? "e-line" : "b-loop";
}

std::vector<std::string> field_param_names(FieldKind kind) {
  if (kind == FieldKind::ELine) return {"lambda", "length"};
  return {"current", "radius"};
}

VectorField make_field(const FieldConfig& cfg) {
  const std::vector<std::string> names = field_param_names(cfg.kind);
  for (const auto& [name, value] : cfg.params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ContractError("unknown parameter --" + name + " for field '" +
                          std::string(field_kind_name(cfg.kind)) + "'");
    }
    if (!std::isfinite(value)) throw ContractError("parameter --" + name + " must be finite");
  }
  if (cfg.intervals < 1) throw ContractError("--intervals must be at least 1");

  auto get = [&](const char* name, double fallback) {
    auto it = cfg.params.find(name);
    return it == cfg.params.end() ? fallback : it->second;
  };
  auto positive = [&](const char* name, double fallback) {
    const double v = get(name, fallback);
    if (!(v > 0.0)) throw ContractError("--" + std::string(name) + " must be positive");
    return v;
  };

  if (cfg.kind == FieldKind::ELine) {
    const double lambda = get("lambda", 1e-9);
    return e_field_from_line_charge([lambda](const Position&) { return lambda; },
                                    line_segment(positive("length", 1.0)), cfg.intervals);
  }
  return b_field_from_line_current(get("current", 1.0), circular_loop(positive("radius", 1.0)),
                                   cfg.intervals);
}

Vec3 evaluate_field(const FieldConfig& cfg, const Position& at) { return make_field(cfg)(at); }

double axis_coordinate(const GridAxis& axis, int index) {
  if (axis.count <= 1) return axis.min;
  if (index == axis.count - 1) return axis.max;
  return axis.min + (axis.max - axis.min) * index / (axis.count - 1);
}

void sample_field_grid(const FieldConfig& cfg, const std::array<GridAxis, 3>& axes,
                       std::ostream& out) {
  for (const GridAxis& a : axes) {
    if (a.count < 1) throw ContractError("grid counts must be at least 1");
    if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw ContractError("grid bounds must be finite");
    }
  }
  const VectorField field = make_field(cfg);

  const auto [nx, ny, nz] = std::array{static_cast<std::size_t>(axes[0].count),
                                       static_cast<std::size_t>(axes[1].count),
                                       static_cast<std::size_t>(axes[2].count)};
  const std::size_t total = nx * ny * nz;
  auto point_at = [&](std::size_t idx) {
    const auto iz = static_cast<int>(idx % nz);
    const auto iy = static_cast<int>((idx / nz) % ny);
    const auto ix = static_cast<int>(idx / (nz * ny));
    return cart(axis_coordinate(axes[0], ix), axis_coordinate(axes[1], iy),
                axis_coordinate(axes[2], iz));
  };

  std::vector<Vec3> values(total);
  std::atomic<std::size_t> next{0};
  std::size_t first_bad = std::numeric_limits<std::size_t>::max();
  std::string first_bad_msg;
  std::mutex bad_mutex;

  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      try {
        values[idx] = field(point_at(idx));
      } catch (const DomainError& e) {
        std::lock_guard lock(bad_mutex);
        if (idx < first_bad) {
          first_bad = idx;
          first_bad_msg = e.what();
        }
      }
    }
  };
  const std::size_t thread_count =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), total);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < thread_count; ++i) pool.emplace_back(worker);
    worker();
  }
  if (first_bad != std::numeric_limits<std::size_t>::max()) {
    throw DomainError(first_bad_msg + " at " + to_string(point_at(first_bad)));
  }

  out << "x,y,z,Fx,Fy,Fz\n";
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Position p = point_at(idx);
    const Vec3& f = values[idx];
    std::string line;
    append_values(line, {p.x, p.y, p.z, f.x, f.y, f.z});
    out << line << '\n';
  }
}

std::string sample_field_grid_to_string(const FieldConfig& cfg,
                                        const std::array<GridAxis, 3>& axes) {
  std::ostringstream out;
  sample_field_grid(cfg, axes, out);
  return std::move(out).str();
}

}  // namespace physkit
