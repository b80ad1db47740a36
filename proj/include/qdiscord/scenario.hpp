#pragma once

// Classical initial states sent through local generalized amplitude damping
// on qubit A, the zero-discord conditions, and (lambda, gamma, p) sweeps.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/channels.hpp"
#include "qdiscord/discord.hpp"

namespace qdiscord {

namespace detail {

inline void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << v << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

}  // namespace detail

/// Superposition weight lambda of the initial state, channel decay gamma and
/// channel ground-state bias p.
struct ScenarioPoint {
  double lambda;
  double gamma;
  double p;

  ScenarioPoint(double lambda_, double gamma_, double p_)
      : lambda(lambda_), gamma(gamma_), p(p_) {
    detail::require_unit_interval(lambda, "lambda");
    detail::require_unit_interval(gamma, "gamma");
    detail::require_unit_interval(p, "p");
  }
};

/// 1/2 (|psi0><psi0| (x) |0><0| + |psi1><psi1| (x) |1><1|) with
/// |psi0> = sqrt(l)|0> + sqrt(1-l)|1>, |psi1> = sqrt(1-l)|0> - sqrt(l)|1>.
inline DensityMatrix4 initial_state(double lambda) {
  detail::require_unit_interval(lambda, "lambda");
  const double s = std::sqrt(lambda);
  const double c = std::sqrt(1.0 - lambda);
  const Eigen::Vector2cd psi0(s, c);
  const Eigen::Vector2cd psi1(c, -s);
  Operator2 ket0 = Operator2::Zero(), ket1 = Operator2::Zero();
  ket0(0, 0) = 1.0;
  ket1(1, 1) = 1.0;
  const Operator4 m = 0.5 * (kron(psi0 * psi0.adjoint(), ket0) +
                             kron(psi1 * psi1.adjoint(), ket1));
  return DensityMatrix4::from_matrix(m);
}

/// Closed-form Pauli coordinates of the channel output.
inline XFamilyState output_coefficients(const ScenarioPoint& pt) {
  const double x3 = (2.0 * pt.p - 1.0) * pt.gamma;
  const double t13 = 2.0 * std::sqrt(pt.lambda * (1.0 - pt.lambda) * (1.0 - pt.gamma));
  const double t33 = (1.0 - pt.gamma) * (2.0 * pt.lambda - 1.0);
  return XFamilyState(x3, t13, t33);
}

/// The channel output computed by actually applying the Kraus operators.
inline DensityMatrix4 output_state_simulated(const ScenarioPoint& pt) {
  return apply_local_A(gad_channel(pt.p, pt.gamma), initial_state(pt.lambda));
}

struct PointReport {
  double lambda, gamma, p;
  double x3, t13, t33;
  double geometric;
  EntropicDiscord entropic;
};

inline PointReport evaluate_point(const ScenarioPoint& pt) {
  const XFamilyState s = output_coefficients(pt);
  return {pt.lambda, pt.gamma,   pt.p,
          s.x3(),    s.t13(),    s.t33(),
          geometric_discord_xfamily(s), entropic_discord_xfamily(s)};
}

/// Entropic discord of the channel output at (lambda, gamma, p).
inline double scenario_discord(double lambda, double gamma, double p) {
  return entropic_discord_xfamily(output_coefficients({lambda, gamma, p})).value;
}

// ---------------------------------------------------------------------------
// Zero-discord conditions and lambda symmetry

enum class ZeroCondition { gamma_zero, gamma_one, lambda_zero, lambda_one, p_half };

inline const char* to_string(ZeroCondition c) {
  switch (c) {
    case ZeroCondition::gamma_zero:
      return "gamma=0";
    case ZeroCondition::gamma_one:
      return "gamma=1";
    case ZeroCondition::lambda_zero:
      return "lambda=0";
    case ZeroCondition::lambda_one:
      return "lambda=1";
    case ZeroCondition::p_half:
      return "p=0.5";
  }
  return "unknown";
}

constexpr double kConditionTol = 1e-12;

/// The zero-discord conditions satisfied at pt (empty if none).
inline std::vector<ZeroCondition> zero_discord_conditions(const ScenarioPoint& pt) {
  std::vector<ZeroCondition> out;
  const auto near = [](double v, double target) {
    return std::abs(v - target) <= kConditionTol;
  };
  if (near(pt.gamma, 0.0)) out.push_back(ZeroCondition::gamma_zero);
  if (near(pt.gamma, 1.0)) out.push_back(ZeroCondition::gamma_one);
  if (near(pt.lambda, 0.0)) out.push_back(ZeroCondition::lambda_zero);
  if (near(pt.lambda, 1.0)) out.push_back(ZeroCondition::lambda_one);
  if (near(pt.p, 0.5)) out.push_back(ZeroCondition::p_half);
  return out;
}

/// |D(p, lambda, gamma) - D(p, 1 - lambda, gamma)|.
inline double lambda_mirror_residual(double lambda, double gamma, double p) {
  return std::abs(scenario_discord(lambda, gamma, p) -
                  scenario_discord(1.0 - lambda, gamma, p));
}

// ---------------------------------------------------------------------------
// Sweeps

enum class Parameter { lambda, gamma, p };

inline const char* to_string(Parameter p) {
  switch (p) {
    case Parameter::lambda:
      return "lambda";
    case Parameter::gamma:
      return "gamma";
    case Parameter::p:
      return "p";
  }
  return "unknown";
}

inline std::optional<Parameter> parse_parameter(std::string_view name) {
  if (name == "lambda") return Parameter::lambda;
  if (name == "gamma") return Parameter::gamma;
  if (name == "p") return Parameter::p;
  return std::nullopt;
}

struct Axis {
  Parameter parameter;
  double min;
  double max;
  std::size_t count;

  double value(std::size_t i) const {
    if (count == 1) return min;
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

/// One or two swept axes; every parameter not on an axis takes its fixed value.
struct SweepSpec {
  std::vector<Axis> axes;
  std::array<std::optional<double>, 3> fixed{};

  void fix(Parameter p, double v) { fixed[static_cast<std::size_t>(p)] = v; }
};

struct SweepCell {
  double lambda, gamma, p;
  double entropic, geometric, theta_star;
};

struct SweepGrid {
  SweepSpec spec;
  std::vector<SweepCell> cells;  // row-major: axis 0 outer, axis 1 inner

  std::size_t rows() const { return spec.axes.front().count; }
  std::size_t cols() const { return spec.axes.size() > 1 ? spec.axes[1].count : 1; }
  const SweepCell& at(std::size_t row, std::size_t col) const {
    return cells[row * cols() + col];
  }
};

inline void validate_sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw ConfigError("a sweep needs one or two axes");
  if (spec.axes.size() == 2 && spec.axes[0].parameter == spec.axes[1].parameter)
    throw ConfigError("both axes sweep the same parameter");
  for (const Axis& a : spec.axes) {
    const std::string name = to_string(a.parameter);
    if (a.count < 1) throw ConfigError("axis " + name + " needs at least one point");
    if (!(a.min >= 0.0 && a.max <= 1.0 && a.min <= a.max))
      throw ConfigError("axis " + name + " range must satisfy 0 <= min <= max <= 1");
  }
  for (Parameter p : {Parameter::lambda, Parameter::gamma, Parameter::p}) {
    bool swept = false;
    for (const Axis& a : spec.axes) swept = swept || a.parameter == p;
    if (swept) continue;
    const auto& v = spec.fixed[static_cast<std::size_t>(p)];
    if (!v) throw ConfigError(std::string("no value for fixed parameter ") + to_string(p));
    if (!(*v >= 0.0 && *v <= 1.0))
      throw ConfigError(std::string("fixed ") + to_string(p) + " outside [0, 1]");
  }
}

inline SweepGrid run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);
  SweepGrid grid{spec, {}};
  const std::size_t rows = grid.rows();
  const std::size_t cols = grid.cols();
  grid.cells.reserve(rows * cols);

  std::array<double, 3> values{};
  for (std::size_t k = 0; k < 3; ++k) values[k] = spec.fixed[k].value_or(0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    values[static_cast<std::size_t>(spec.axes[0].parameter)] = spec.axes[0].value(i);
    for (std::size_t j = 0; j < cols; ++j) {
      if (spec.axes.size() > 1)
        values[static_cast<std::size_t>(spec.axes[1].parameter)] = spec.axes[1].value(j);
      const PointReport r = evaluate_point({values[0], values[1], values[2]});
      grid.cells.push_back(
          {r.lambda, r.gamma, r.p, r.entropic.value, r.geometric, r.entropic.theta_star});
    }
  }
  return grid;
}

constexpr std::size_t kFigureResolution = 101;
constexpr std::array<double, 4> kFigure1Biases = {1.0, 0.8, 0.6, 0.55};

/// Discord over (lambda, gamma) at each of the four channel biases.
inline std::vector<SweepSpec> figure1_specs(std::size_t resolution = kFigureResolution) {
  std::vector<SweepSpec> out;
  for (double p : kFigure1Biases) {
    SweepSpec s;
    s.axes = {{Parameter::lambda, 0.0, 1.0, resolution},
              {Parameter::gamma, 0.0, 1.0, resolution}};
    s.fix(Parameter::p, p);
    out.push_back(s);
  }
  return out;
}

/// Discord over (p, gamma) in [0.5, 1] x [0, 1] at lambda = 1/2.
inline SweepSpec figure2_spec(std::size_t resolution = kFigureResolution) {
  SweepSpec s;
  s.axes = {{Parameter::p, 0.5, 1.0, resolution}, {Parameter::gamma, 0.0, 1.0, resolution}};
  s.fix(Parameter::lambda, 0.5);
  return s;
}

}  // namespace qdiscord
