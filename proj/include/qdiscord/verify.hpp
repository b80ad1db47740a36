#pragma once

// The invariant suite behind `qdiscord verify`. Each check reports the worst
// residual it observed against a fixed tolerance; counting checks report the
// number of violations against a tolerance of zero.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qdiscord/channels.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/random.hpp"
#include "qdiscord/scenario.hpp"

namespace qdiscord {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t oracle_resolution = 128;
  std::size_t oracle_points = 10;
  double tolerance_scale = 1.0;
};

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool passed;
};

/// Agreement band between the reduced and brute-force entropic discord at a
/// given oracle grid resolution.
inline double oracle_band(std::size_t resolution) {
  return resolution >= 128 ? 2e-4 : 2e-3;
}

namespace detail {

inline Eigen::Vector3d bloch_vector(const DensityMatrix2& rho) {
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = (rho.matrix() * pauli::sigma(i)).trace().real();
  return v;
}

struct Check {
  std::string name;
  double tolerance;
  std::function<double(StateSampler&, const VerifyConfig&)> residual;
  bool oracle_banded = false;  // tolerance follows oracle_band(resolution)
};

inline std::vector<Check> checks() {
  std::vector<Check> out;

  // qcore -------------------------------------------------------------------
  out.push_back({"qcore: compose(decompose(rho)) = rho", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto rho = rng.density<4>();
                     worst = std::max(
                         worst, (pauli_compose(pauli_decompose(rho)) - rho.matrix()).norm());
                   }
                   return worst;
                 }});
  out.push_back({"qcore: entropy invariant under Pauli round trip", 1e-10,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto rho = rng.density<4>();
                     const auto back = DensityMatrix4::from_matrix(
                         pauli_compose(pauli_decompose(rho)));
                     worst = std::max(worst, std::abs(von_neumann_entropy(rho) -
                                                      von_neumann_entropy(back)));
                   }
                   return worst;
                 }});
  out.push_back({"qcore: partial trace keeps unit trace", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto rho = rng.density<4>();
                     worst = std::max(
                         {worst, std::abs(partial_trace_B(rho).matrix().trace() - 1.0),
                          std::abs(partial_trace_A(rho).matrix().trace() - 1.0)});
                   }
                   return worst;
                 }});
  out.push_back({"qcore: h(x) = h(1 - x)", 1e-15, [](StateSampler&, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const double x = k / 999.0;
                     worst = std::max(worst,
                                      std::abs(binary_entropy(x) - binary_entropy(1.0 - x)));
                   }
                   return worst;
                 }});
  out.push_back({"qcore: S(diag(x, 1 - x)) = h(x)", 1e-12,
                 [](StateSampler&, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int k = 0; k < 1000; ++k) {
                     const double x = k / 999.0;
                     Operator2 m = Operator2::Zero();
                     m(0, 0) = x;
                     m(1, 1) = 1.0 - x;
                     worst = std::max(worst,
                                      std::abs(von_neumann_entropy(DensityMatrix2::from_matrix(m)) -
                                               binary_entropy(x)));
                   }
                   return worst;
                 }});

  // channels ----------------------------------------------------------------
  out.push_back({"channels: GAD trace preserving on 21x21 grid", 1e-12,
                 [](StateSampler&, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int i = 0; i <= 20; ++i)
                     for (int j = 0; j <= 20; ++j)
                       worst = std::max(
                           worst, is_trace_preserving(gad_channel(i / 20.0, j / 20.0)).residual);
                   return worst;
                 }});
  out.push_back({"channels: output trace and hermiticity", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto ch = gad_channel(rng.uniform(), rng.uniform());
                     const auto out = apply_single(ch, rng.density<2>());
                     worst = std::max({worst, std::abs(out.matrix().trace() - 1.0),
                                       hermiticity_defect<2>(out.matrix())});
                   }
                   return worst;
                 }});
  out.push_back({"channels: output positivity (-min eigenvalue)", 1e-10,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto ch = gad_channel(rng.uniform(), rng.uniform());
                     const auto out = apply_single(ch, rng.density<2>());
                     worst = std::max(worst, -eigvals_hermitian<2>(out.matrix()).front());
                   }
                   return worst;
                 }});
  out.push_back({"channels: GAD acts as the affine Bloch map", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const double p = rng.uniform();
                     const double gamma = rng.uniform();
                     const auto rho = rng.density<2>();
                     const Eigen::Vector3d u = bloch_vector(rho);
                     const Eigen::Vector3d v = bloch_vector(apply_single(gad_channel(p, gamma), rho));
                     const double s = std::sqrt(1.0 - gamma);
                     const Eigen::Vector3d expected(
                         s * u(0), s * u(1), (1.0 - gamma) * u(2) + (2.0 * p - 1.0) * gamma);
                     worst = std::max(worst, (v - expected).cwiseAbs().maxCoeff());
                   }
                   return worst;
                 }});
  out.push_back({"channels: channel on A leaves B's marginal unchanged", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto ch = gad_channel(rng.uniform(), rng.uniform());
                     const auto rho = rng.density<4>();
                     const Operator2 diff = partial_trace_A(apply_local_A(ch, rho)).matrix() -
                                            partial_trace_A(rho).matrix();
                     worst = std::max(worst, diff.cwiseAbs().maxCoeff());
                   }
                   return worst;
                 }});

  // discord -----------------------------------------------------------------
  out.push_back({"discord: zero entropic iff zero geometric (violations)", 0.0,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double violations = 0.0;
                   for (int n = 0; n < 500; ++n) {
                     XFamilyState s = rng.xfamily();
                     // A fifth of the sample lies on the zero-discord sets.
                     if (n % 10 == 0) s = XFamilyState(0.0, s.t13(), s.t33());
                     if (n % 10 == 5) s = XFamilyState(s.x3(), 0.0, s.t33());
                     const double dg = geometric_discord_xfamily(s);
                     if (dg > 1e-9 && dg < 1e-6) continue;  // borderline band
                     const bool entropic_zero = entropic_discord_xfamily(s).value <= 1e-6;
                     if (entropic_zero != (dg <= 1e-9)) violations += 1.0;
                   }
                   return violations;
                 }});
  out.push_back({"discord: X-family geometric form = general form", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto s = rng.xfamily();
                     worst = std::max(worst, std::abs(geometric_discord_xfamily(s) -
                                                      geometric_discord_general(s.density_matrix())));
                   }
                   return worst;
                 }});
  out.push_back({"discord: measured conditional entropy = reduced form", 1e-10,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto s = rng.xfamily();
                     const auto m = rng.measurement();
                     worst = std::max(
                         worst, std::abs(measured_conditional_entropy(s.density_matrix(), m) -
                                         reduced_conditional_entropy(s, m.alpha(), m.beta())));
                   }
                   return worst;
                 }});
  out.push_back({"discord: F(alpha, beta) = F(-alpha, -beta)", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto s = rng.xfamily();
                     const double rad = std::sqrt(rng.uniform());
                     const double phi = rng.angle();
                     const double a = rad * std::cos(phi), b = rad * std::sin(phi);
                     worst = std::max(worst, std::abs(reduced_conditional_entropy(s, a, b) -
                                                      reduced_conditional_entropy(s, -a, -b)));
                   }
                   return worst;
                 }});
  out.push_back({"discord: F(theta; T33) = F(pi - theta; -T33)", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto s = rng.xfamily();
                     const XFamilyState mirrored(s.x3(), s.t13(), -s.t33());
                     const double theta = rng.uniform(0.0, std::numbers::pi);
                     worst = std::max(
                         worst, std::abs(circle_conditional_entropy(theta, s) -
                                         circle_conditional_entropy(std::numbers::pi - theta,
                                                                    mirrored)));
                   }
                   return worst;
                 }});
  out.push_back({"discord: invariance under sigma_x on A", 1e-10,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 300; ++n) {
                     const auto s = rng.xfamily();
                     const XFamilyState flipped(-s.x3(), s.t13(), -s.t33());
                     worst = std::max({worst,
                                       std::abs(entropic_discord_xfamily(s).value -
                                                entropic_discord_xfamily(flipped).value),
                                       std::abs(geometric_discord_xfamily(s) -
                                                geometric_discord_xfamily(flipped))});
                   }
                   return worst;
                 }});
  out.push_back({"discord: raw entropic discord nonnegative (-min raw)", 1e-9,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 500; ++n) {
                     const double raw = entropic_discord_xfamily(rng.xfamily()).raw;
                     worst = std::max(worst, -raw);
                   }
                   return worst;
                 }});
  out.push_back({"discord: minimum <= F(0), F(pi/2), F(pi)", 0.0,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 500; ++n) {
                     const auto s = rng.xfamily();
                     const double v = minimize_conditional_entropy(s).value;
                     const double anchor = std::min(
                         {circle_conditional_entropy(0.0, s),
                          circle_conditional_entropy(0.5 * std::numbers::pi, s),
                          circle_conditional_entropy(std::numbers::pi, s)});
                     worst = std::max(worst, v - anchor);
                   }
                   return worst;
                 }});
  out.push_back({"discord: disc minimum attained on the circle (violations)", 0.0,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double violations = 0.0;
                   for (int n = 0; n < 100; ++n)
                     if (!boundary_minimum_check(rng.xfamily(), 100).passed) violations += 1.0;
                   return violations;
                 }});
  out.push_back({"discord: reduced vs brute-force entropic discord", 0.0,
                 [](StateSampler& rng, const VerifyConfig& cfg) {
                   double worst = 0.0;
                   for (std::size_t n = 0; n < cfg.oracle_points; ++n) {
                     const XFamilyState s = output_coefficients(rng.point(0.05, 0.95));
                     const double reduced = entropic_discord_xfamily(s).value;
                     const double brute =
                         entropic_discord_bruteforce(s.density_matrix(), cfg.oracle_resolution,
                                                     cfg.oracle_resolution);
                     worst = std::max(worst, std::abs(reduced - brute));
                   }
                   return worst;
                 },
                 true});

  // scenario ----------------------------------------------------------------
  out.push_back({"scenario: initial states carry no discord", 1e-8,
                 [](StateSampler&, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int k = 0; k <= 100; ++k) {
                     const auto rho = initial_state(k / 100.0);
                     const BlochForm b = pauli_decompose(rho);
                     const XFamilyState s(b.x(2), b.t(0, 2), b.t(2, 2));
                     worst = std::max({worst, geometric_discord_general(rho),
                                       entropic_discord_xfamily(s).value});
                   }
                   return worst;
                 }});
  out.push_back({"scenario: simulated output = closed form", 1e-12,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 1000; ++n) {
                     const auto pt = rng.point();
                     worst = std::max(worst, (output_state_simulated(pt).matrix() -
                                              output_coefficients(pt).operator_matrix())
                                                 .norm());
                   }
                   return worst;
                 }});
  out.push_back({"scenario: zero-discord conditions (max discord)", 1e-8,
                 [](StateSampler&, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int i = 0; i <= 20; ++i) {
                     for (int j = 0; j <= 20; ++j) {
                       const double u = i / 20.0, v = j / 20.0;
                       for (const ScenarioPoint& pt :
                            {ScenarioPoint(u, 0.0, v), ScenarioPoint(u, 1.0, v),
                             ScenarioPoint(0.0, u, v), ScenarioPoint(1.0, u, v),
                             ScenarioPoint(u, v, 0.5)}) {
                         const auto r = evaluate_point(pt);
                         worst = std::max({worst, r.entropic.value, r.geometric});
                       }
                     }
                   }
                   return worst;
                 }});
  out.push_back({"scenario: discord symmetric about lambda = 1/2", 1e-9,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 200; ++n) {
                     const auto pt = rng.point();
                     worst = std::max(worst, lambda_mirror_residual(pt.lambda, pt.gamma, pt.p));
                   }
                   return worst;
                 }});
  out.push_back({"scenario: discord symmetric under p -> 1 - p", 1e-9,
                 [](StateSampler& rng, const VerifyConfig&) {
                   double worst = 0.0;
                   for (int n = 0; n < 200; ++n) {
                     const auto pt = rng.point();
                     worst = std::max(worst, std::abs(scenario_discord(pt.lambda, pt.gamma, pt.p) -
                                                      scenario_discord(pt.lambda, pt.gamma,
                                                                       1.0 - pt.p)));
                   }
                   return worst;
                 }});
  out.push_back({"scenario: discord non-increasing as p falls to 1/2", 1e-9,
                 [](StateSampler&, const VerifyConfig&) {
                   constexpr double biases[] = {1.0, 0.9, 0.8, 0.7, 0.6, 0.55, 0.5};
                   double worst = 0.0;
                   for (int k = 1; k <= 21; ++k) {
                     const double gamma = k / 22.0;
                     for (std::size_t i = 1; i < std::size(biases); ++i)
                       worst = std::max(worst, scenario_discord(0.5, gamma, biases[i]) -
                                                   scenario_discord(0.5, gamma, biases[i - 1]));
                   }
                   return worst;
                 }});
  out.push_back({"scenario: sweep grid mirror-symmetric in lambda", 1e-9,
                 [](StateSampler&, const VerifyConfig&) {
                   SweepSpec spec;
                   spec.axes = {{Parameter::lambda, 0.0, 1.0, 21}, {Parameter::gamma, 0.0, 1.0, 21}};
                   spec.fix(Parameter::p, 0.8);
                   const SweepGrid g = run_sweep(spec);
                   double worst = 0.0;
                   for (std::size_t i = 0; i < g.rows(); ++i)
                     for (std::size_t j = 0; j < g.cols(); ++j)
                       worst = std::max(worst, std::abs(g.at(i, j).entropic -
                                                        g.at(g.rows() - 1 - i, j).entropic));
                   return worst;
                 }});
  return out;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyConfig& cfg) {
  std::vector<CheckResult> results;
  for (const auto& check : detail::checks()) {
    StateSampler rng(cfg.seed);
    const double tol = (check.oracle_banded ? oracle_band(cfg.oracle_resolution)
                                            : check.tolerance) *
                       cfg.tolerance_scale;
    const double residual = check.residual(rng, cfg);
    results.push_back({check.name, residual, tol, residual <= tol});
  }
  return results;
}

}  // namespace qdiscord
