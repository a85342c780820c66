// physkit command-line front end. Talks to the library only through the C API.
//
//   physkit simulate <scenario> [--dt S] [--steps N] [--method M] [--out FILE] [--<param> V]...
//   physkit field <e-line|b-loop> --at x,y,z [--intervals N] [--<param> V]...
//   physkit grid <e-line|b-loop> --x min,max,n --y min,max,n --z min,max,n [--out FILE] ...
//   physkit scenarios
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 domain error.

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "physkit/physkit.h"

namespace {

constexpr int kUsageExit = PK_USAGE_ERROR;

int report(pk_status status) {
  if (status != PK_OK) std::fprintf(stderr, "physkit: %s\n", pk_last_error_message());
  return static_cast<int>(status);
}

int usage(const std::string& message) {
  std::fprintf(stderr, "physkit: %s\n", message.c_str());
  return kUsageExit;
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using RunConfigPtr = std::unique_ptr<pk_run_config, Deleter<pk_run_config, pk_run_config_destroy>>;
using FieldPtr = std::unique_ptr<pk_field, Deleter<pk_field, pk_field_destroy>>;

// Writes `data` to stdout when path is empty or "-".
int emit(const std::string& path, pk_status (*to_buffer)(char**, size_t*, const void*),
         pk_status (*to_file)(const char*, const void*), const void* ctx) {
  if (path.empty() || path == "-") {
    char* data = nullptr;
    size_t size = 0;
    if (pk_status st = to_buffer(&data, &size, ctx); st != PK_OK) return report(st);
    std::fwrite(data, 1, size, stdout);
    pk_buffer_free(data);
    return std::fflush(stdout) == 0 ? 0 : report(PK_ERROR);
  }
  return report(to_file(path.c_str(), ctx));
}

struct SimulateArgs {
  std::string scenario;
  std::optional<double> dt;
  std::optional<long long> steps;
  std::optional<std::string> method;
  std::string out;
  std::map<std::string, std::optional<double>> params;
};

struct FieldArgs {
  std::string kind;
  std::string at;
  std::optional<int> intervals;
  std::string out;
  std::string grid_x, grid_y, grid_z;
  std::map<std::string, std::optional<double>> params;
};

int run_simulate(const SimulateArgs& args) {
  pk_run_config* raw = nullptr;
  if (pk_status st = pk_run_config_create(args.scenario.c_str(), &raw); st != PK_OK) {
    return report(st);
  }
  RunConfigPtr cfg(raw);
  if (args.dt) {
    if (pk_status st = pk_run_config_set_dt(cfg.get(), *args.dt); st != PK_OK) return report(st);
  }
  if (args.steps) {
    if (pk_status st = pk_run_config_set_steps(cfg.get(), *args.steps); st != PK_OK) return report(st);
  }
  if (args.method) {
    if (pk_status st = pk_run_config_set_method(cfg.get(), args.method->c_str()); st != PK_OK) {
      return report(st);
    }
  }
  for (const auto& [name, value] : args.params) {
    if (!value) continue;
    if (pk_status st = pk_run_config_set_param(cfg.get(), name.c_str(), *value); st != PK_OK) {
      return report(st);
    }
  }
  return emit(
      args.out,
      [](char** d, size_t* n, const void* c) {
        return pk_simulate_to_buffer(static_cast<const pk_run_config*>(c), d, n);
      },
      [](const char* p, const void* c) {
        return pk_simulate_to_file(static_cast<const pk_run_config*>(c), p);
      },
      cfg.get());
}

int make_field(const FieldArgs& args, FieldPtr& out) {
  pk_field* raw = nullptr;
  if (pk_status st = pk_field_create(args.kind.c_str(), &raw); st != PK_OK) return report(st);
  out.reset(raw);
  if (args.intervals) {
    if (pk_status st = pk_field_set_intervals(raw, *args.intervals); st != PK_OK) return report(st);
  }
  for (const auto& [name, value] : args.params) {
    if (!value) continue;
    if (pk_status st = pk_field_set_param(raw, name.c_str(), *value); st != PK_OK) return report(st);
  }
  return 0;
}

// Prints with 9 significant digits; negative zero prints as 0.
std::string format_component(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

int run_field(const FieldArgs& args) {
  FieldPtr field;
  if (int rc = make_field(args, field); rc != 0) return rc;
  double at[3];
  if (pk_status st = pk_parse_triple(args.at.c_str(), at); st != PK_OK) {
    return usage(std::string("--at: ") + pk_last_error_message());
  }
  double value[3];
  if (pk_status st = pk_field_eval(field.get(), at, value); st != PK_OK) return report(st);
  std::printf("%s,%s,%s\n", format_component(value[0]).c_str(), format_component(value[1]).c_str(),
              format_component(value[2]).c_str());
  return 0;
}

std::optional<pk_grid_axis> parse_axis(const std::string& text) {
  double v[3];
  if (pk_parse_triple(text.c_str(), v) != PK_OK) return std::nullopt;
  if (v[2] < 1 || v[2] != std::floor(v[2]) || v[2] > 1e7) return std::nullopt;
  return pk_grid_axis{v[0], v[1], static_cast<int>(v[2])};
}

int run_grid(const FieldArgs& args) {
  FieldPtr field;
  if (int rc = make_field(args, field); rc != 0) return rc;
  pk_grid_axis axes[3];
  const std::string* specs[3] = {&args.grid_x, &args.grid_y, &args.grid_z};
  const char* names[3] = {"--x", "--y", "--z"};
  for (int i = 0; i < 3; ++i) {
    const auto axis = parse_axis(*specs[i]);
    if (!axis) return usage(std::string(names[i]) + " expects min,max,count with count >= 1");
    axes[i] = *axis;
  }
  struct Ctx {
    const pk_field* field;
    const pk_grid_axis* axes;
  } ctx{field.get(), axes};
  return emit(
      args.out,
      [](char** d, size_t* n, const void* c) {
        const auto* x = static_cast<const Ctx*>(c);
        return pk_field_grid_to_buffer(x->field, x->axes, d, n);
      },
      [](const char* p, const void* c) {
        const auto* x = static_cast<const Ctx*>(c);
        return pk_field_grid_to_file(x->field, x->axes, p);
      },
      &ctx);
}

int run_list() {
  for (size_t i = 0; i < pk_scenario_count(); ++i) {
    const char* name = pk_scenario_name(i);
    double dt = 0;
    long long steps = 0;
    const char* method = nullptr;
    pk_scenario_defaults(name, &dt, &steps, &method);
    std::printf("%s (%s state): %s\n  defaults: --dt %g --steps %lld --method %s\n", name,
                pk_scenario_state_kind(name), pk_scenario_description(name), dt, steps, method);
    for (size_t j = 0; j < pk_scenario_param_count(name); ++j) {
      const char* pname = nullptr;
      const char* desc = nullptr;
      double def = 0;
      int has_default = 0;
      pk_scenario_param(name, j, &pname, &def, &has_default, &desc);
      if (has_default) {
        std::printf("  --%s %g: %s\n", pname, def, desc);
      } else {
        std::printf("  --%s: %s\n", pname, desc);
      }
    }
  }
  return 0;
}

void add_field_params(CLI::App* cmd, FieldArgs& args) {
  for (const char* kind : {"e-line", "b-loop"}) {
    for (size_t i = 0; i < pk_field_param_count(kind); ++i) {
      const std::string name = pk_field_param_name(kind, i);
      cmd->add_option("--" + name, args.params[name], name + " (" + kind + ")");
    }
  }
  cmd->add_option("--intervals", args.intervals, "quadrature intervals (default 1000)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"physkit: mechanics scenarios and line-source fields"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "run a scenario and write a CSV trajectory");
  simulate->add_option("scenario", sim.scenario, "scenario name (see `physkit scenarios`)")->required();
  simulate->add_option("--dt", sim.dt, "timestep (s)");
  simulate->add_option("--steps", sim.steps, "number of steps; N steps give N+1 rows");
  simulate->add_option("--method", sim.method, "euler | euler-cromer | rk4");
  simulate->add_option("--out", sim.out, "output CSV path (default stdout)");
  std::set<std::string> seen;
  for (size_t i = 0; i < pk_scenario_count(); ++i) {
    const char* scenario = pk_scenario_name(i);
    for (size_t j = 0; j < pk_scenario_param_count(scenario); ++j) {
      const char* pname = nullptr;
      pk_scenario_param(scenario, j, &pname, nullptr, nullptr, nullptr);
      if (seen.insert(pname).second) {
        simulate->add_option(std::string("--") + pname, sim.params[pname], "scenario parameter");
      }
    }
  }

  FieldArgs field_args;
  auto* field = app.add_subcommand("field", "evaluate a field at one point");
  field->add_option("kind", field_args.kind, "e-line | b-loop")->required();
  field->add_option("--at", field_args.at, "field point x,y,z (m)")->required();
  add_field_params(field, field_args);

  FieldArgs grid_args;
  auto* grid = app.add_subcommand("grid", "sample a field on a rectilinear grid to CSV");
  grid->add_option("kind", grid_args.kind, "e-line | b-loop")->required();
  grid->add_option("--x", grid_args.grid_x, "min,max,count")->required();
  grid->add_option("--y", grid_args.grid_y, "min,max,count")->required();
  grid->add_option("--z", grid_args.grid_z, "min,max,count")->required();
  grid->add_option("--out", grid_args.out, "output CSV path (default stdout)");
  add_field_params(grid, grid_args);

  auto* list = app.add_subcommand("scenarios", "list scenarios and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageExit;
  }

  if (simulate->parsed()) return run_simulate(sim);
  if (field->parsed()) return run_field(field_args);
  if (grid->parsed()) return run_grid(grid_args);
  if (list->parsed()) return run_list();
  return kUsageExit;
}
