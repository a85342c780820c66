#pragma once

// Registry of named mechanics scenarios. Each entry describes its state
// space, defaults, accepted parameters, and builds the problem to integrate.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "physkit/mechanics.hpp"
#include "physkit/solver.hpp"

namespace physkit {

enum class StateKind { Particle, Angular, System };

enum class Method { Euler, EulerCromer, Rk4 };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct ParamSpec {
  std::string name;
  std::optional<double> default_value;  // nullopt: derived from other params
  std::string description;
};

using ParamValues = std::map<std::string, double, std::less<>>;

struct ParticleProblem {
  AccelerationFunction accel;
  ParticleState initial;
};

struct AngularProblem {
  DifferentialEquation<AngularState> equation;
  AngularState initial;
};

struct SystemProblem {
  SystemAccFunc accel;
  SystemState initial;
};

using Problem = std::variant<ParticleProblem, AngularProblem, SystemProblem>;

struct ScenarioInfo {
  std::string name;
  std::string description;
  StateKind kind;
  double default_dt;
  long long default_steps;
  Method default_method;
  std::vector<Method> methods;
  std::vector<ParamSpec> params;
  // Receives only the explicitly supplied parameters; fills in defaults
  // itself. Throws ContractError on invalid values.
  std::function<Problem(const ParamValues&)> build;

  bool supports(Method m) const;
  const ParamSpec* find_param(std::string_view param) const;
};

const std::vector<ScenarioInfo>& scenario_registry();

/// nullptr when no scenario has that name.
const ScenarioInfo* find_scenario(std::string_view name);

// Illustrative Sun-Earth-Moon values used by the three-body scenario.
inline constexpr double kSunMass = 1.989e30;        // kg
inline constexpr double kEarthMassSEM = 5.972e24;   // kg
inline constexpr double kMoonMass = 7.35e22;        // kg
inline constexpr double kAstronomicalUnit = 1.496e11;  // m
inline constexpr double kEarthMoonDistance = 3.844e8;  // m

}  // namespace physkit
