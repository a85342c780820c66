#include "physkit/physkit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "physkit/errors.hpp"
#include "physkit/run.hpp"

struct pk_run_config {
  physkit::RunConfig cfg;
  const physkit::ScenarioInfo* info = nullptr;
};

struct pk_field {
  physkit::FieldConfig cfg;
};

namespace {

thread_local std::string g_last_error;

pk_status fail(pk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
pk_status guarded(Body&& body) {
  try {
    return body();
  } catch (const physkit::DomainError& e) {
    return fail(PK_DOMAIN_ERROR, e.what());
  } catch (const physkit::ContractError& e) {
    return fail(PK_USAGE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PK_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PK_ERROR, e.what());
  } catch (...) {
    return fail(PK_ERROR, "unknown error");
  }
}

const physkit::ScenarioInfo* scenario_or_null(const char* name) {
  return name == nullptr ? nullptr : physkit::find_scenario(name);
}

pk_status unknown_scenario(const char* name) {
  return fail(PK_USAGE_ERROR, std::string("unknown scenario '") + (name ? name : "(null)") + "'");
}

pk_status copy_out(const std::string& text, char** data, size_t* size) {
  if (data == nullptr || size == nullptr) return fail(PK_USAGE_ERROR, "null output pointer");
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) return fail(PK_ERROR, "out of memory");
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
  *data = buf;
  *size = text.size();
  return PK_OK;
}

pk_status write_file(const std::string& text, const char* path) {
  if (path == nullptr) return fail(PK_USAGE_ERROR, "null output path");
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out && out.write(text.data(), static_cast<std::streamsize>(text.size())) && out.flush()) {
      return PK_OK;
    }
  }
  std::remove(path);
  return fail(PK_ERROR, std::string("cannot write '") + path + "'");
}

std::array<physkit::GridAxis, 3> to_axes(const pk_grid_axis axes[3]) {
  std::array<physkit::GridAxis, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = {axes[i].min, axes[i].max, axes[i].count};
  return out;
}

const char* const kELineParams[] = {"lambda", "length"};
const char* const kBLoopParams[] = {"current", "radius"};

}  // namespace

extern "C" {

const char* pk_last_error_message(void) { return g_last_error.c_str(); }

const char* pk_version(void) { return "1.0.0"; }

size_t pk_scenario_count(void) { return physkit::scenario_registry().size(); }

const char* pk_scenario_name(size_t index) {
  const auto& reg = physkit::scenario_registry();
  return index < reg.size() ? reg[index].name.c_str() : nullptr;
}

const char* pk_scenario_description(const char* scenario) {
  const auto* info = scenario_or_null(scenario);
  return info ? info->description.c_str() : nullptr;
}

const char* pk_scenario_state_kind(const char* scenario) {
  const auto* info = scenario_or_null(scenario);
  if (info == nullptr) return nullptr;
  switch (info->kind) {
    case physkit::StateKind::Particle: return "particle";
    case physkit::StateKind::Angular: return "angular";
    case physkit::StateKind::System: return "system";
  }
  return nullptr;
}

pk_status pk_scenario_defaults(const char* scenario, double* dt, long long* steps,
                               const char** method) {
  const auto* info = scenario_or_null(scenario);
  if (info == nullptr) return unknown_scenario(scenario);
  if (dt) *dt = info->default_dt;
  if (steps) *steps = info->default_steps;
  if (method) *method = physkit::method_name(info->default_method).data();
  return PK_OK;
}

int pk_scenario_supports_method(const char* scenario, const char* method) {
  const auto* info = scenario_or_null(scenario);
  if (info == nullptr || method == nullptr) return 0;
  const auto m = physkit::parse_method(method);
  return m && info->supports(*m) ? 1 : 0;
}

size_t pk_scenario_param_count(const char* scenario) {
  const auto* info = scenario_or_null(scenario);
  return info ? info->params.size() : 0;
}

pk_status pk_scenario_param(const char* scenario, size_t index, const char** name,
                            double* default_value, int* has_default, const char** description) {
  const auto* info = scenario_or_null(scenario);
  if (info == nullptr) return unknown_scenario(scenario);
  if (index >= info->params.size()) return fail(PK_USAGE_ERROR, "parameter index out of range");
  const physkit::ParamSpec& p = info->params[index];
  if (name) *name = p.name.c_str();
  if (default_value) *default_value = p.default_value.value_or(std::nan(""));
  if (has_default) *has_default = p.default_value.has_value() ? 1 : 0;
  if (description) *description = p.description.c_str();
  return PK_OK;
}

pk_status pk_run_config_create(const char* scenario, pk_run_config** out) {
  if (out == nullptr) return fail(PK_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  const auto* info = scenario_or_null(scenario);
  if (info == nullptr) return unknown_scenario(scenario);
  return guarded([&] {
    auto* cfg = new pk_run_config;
    cfg->cfg.scenario = info->name;
    cfg->info = info;
    *out = cfg;
    return PK_OK;
  });
}

void pk_run_config_destroy(pk_run_config* cfg) { delete cfg; }

pk_status pk_run_config_set_dt(pk_run_config* cfg, double dt) {
  if (cfg == nullptr) return fail(PK_USAGE_ERROR, "null config");
  if (!std::isfinite(dt) || !(dt > 0.0)) return fail(PK_USAGE_ERROR, "--dt must be positive and finite");
  cfg->cfg.dt = dt;
  return PK_OK;
}

pk_status pk_run_config_set_steps(pk_run_config* cfg, long long steps) {
  if (cfg == nullptr) return fail(PK_USAGE_ERROR, "null config");
  if (steps < 0) return fail(PK_USAGE_ERROR, "--steps must be non-negative");
  cfg->cfg.steps = steps;
  return PK_OK;
}

pk_status pk_run_config_set_method(pk_run_config* cfg, const char* method) {
  if (cfg == nullptr || method == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  const auto m = physkit::parse_method(method);
  if (!m) return fail(PK_USAGE_ERROR, std::string("unknown method '") + method + "'");
  if (!cfg->info->supports(*m)) {
    return fail(PK_USAGE_ERROR, std::string("method '") + method +
                                    "' is not available for scenario '" + cfg->info->name + "'");
  }
  cfg->cfg.method = *m;
  return PK_OK;
}

pk_status pk_run_config_set_param(pk_run_config* cfg, const char* name, double value) {
  if (cfg == nullptr || name == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  if (cfg->info->find_param(name) == nullptr) {
    return fail(PK_USAGE_ERROR, std::string("unknown parameter --") + name + " for scenario '" +
                                    cfg->info->name + "'");
  }
  if (!std::isfinite(value)) return fail(PK_USAGE_ERROR, std::string("--") + name + " must be finite");
  return guarded([&] {
    cfg->cfg.params.insert_or_assign(name, value);
    return PK_OK;
  });
}

pk_status pk_simulate_to_file(const pk_run_config* cfg, const char* path) {
  if (cfg == nullptr) return fail(PK_USAGE_ERROR, "null config");
  return guarded([&] { return write_file(physkit::simulate_to_string(cfg->cfg), path); });
}

pk_status pk_simulate_to_buffer(const pk_run_config* cfg, char** data, size_t* size) {
  if (cfg == nullptr) return fail(PK_USAGE_ERROR, "null config");
  return guarded([&] { return copy_out(physkit::simulate_to_string(cfg->cfg), data, size); });
}

pk_status pk_field_create(const char* kind, pk_field** out) {
  if (out == nullptr) return fail(PK_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  const auto k = kind ? physkit::parse_field_kind(kind) : std::nullopt;
  if (!k) {
    return fail(PK_USAGE_ERROR, std::string("unknown field kind '") + (kind ? kind : "(null)") +
                                    "' (expected e-line or b-loop)");
  }
  return guarded([&] {
    auto* f = new pk_field;
    f->cfg.kind = *k;
    *out = f;
    return PK_OK;
  });
}

void pk_field_destroy(pk_field* field) { delete field; }

size_t pk_field_param_count(const char* kind) {
  return kind && physkit::parse_field_kind(kind) ? 2 : 0;
}

const char* pk_field_param_name(const char* kind, size_t index) {
  const auto k = kind ? physkit::parse_field_kind(kind) : std::nullopt;
  if (!k || index >= 2) return nullptr;
  return *k == physkit::FieldKind::ELine ? kELineParams[index] : kBLoopParams[index];
}

pk_status pk_field_set_param(pk_field* field, const char* name, double value) {
  if (field == nullptr || name == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  return guarded([&] {
    const auto names = physkit::field_param_names(field->cfg.kind);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      return fail(PK_USAGE_ERROR, std::string("unknown parameter --") + name + " for field '" +
                                      std::string(physkit::field_kind_name(field->cfg.kind)) + "'");
    }
    if (!std::isfinite(value)) return fail(PK_USAGE_ERROR, std::string("--") + name + " must be finite");
    field->cfg.params.insert_or_assign(name, value);
    return PK_OK;
  });
}

pk_status pk_field_set_intervals(pk_field* field, int intervals) {
  if (field == nullptr) return fail(PK_USAGE_ERROR, "null field");
  if (intervals < 1) return fail(PK_USAGE_ERROR, "--intervals must be at least 1");
  field->cfg.intervals = intervals;
  return PK_OK;
}

pk_status pk_field_eval(const pk_field* field, const double at[3], double out[3]) {
  if (field == nullptr || at == nullptr || out == nullptr) {
    return fail(PK_USAGE_ERROR, "null argument");
  }
  return guarded([&] {
    const physkit::Vec3 f = physkit::evaluate_field(field->cfg, physkit::cart(at[0], at[1], at[2]));
    out[0] = f.x;
    out[1] = f.y;
    out[2] = f.z;
    return PK_OK;
  });
}

pk_status pk_field_grid_to_file(const pk_field* field, const pk_grid_axis axes[3],
                                const char* path) {
  if (field == nullptr || axes == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  return guarded([&] {
    return write_file(physkit::sample_field_grid_to_string(field->cfg, to_axes(axes)), path);
  });
}

pk_status pk_field_grid_to_buffer(const pk_field* field, const pk_grid_axis axes[3], char** data,
                                  size_t* size) {
  if (field == nullptr || axes == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  return guarded([&] {
    return copy_out(physkit::sample_field_grid_to_string(field->cfg, to_axes(axes)), data, size);
  });
}

pk_status pk_parse_triple(const char* text, double out[3]) {
  if (text == nullptr || out == nullptr) return fail(PK_USAGE_ERROR, "null argument");
  return guarded([&] {
    const physkit::Vec3 v = physkit::parse_vec3(text);
    out[0] = v.x;
    out[1] = v.y;
    out[2] = v.z;
    return PK_OK;
  });
}

void pk_buffer_free(char* data) { std::free(data); }

}  // extern "C"
