#pragma once

// Seeded generators for randomized property checks.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qdiscord/discord.hpp"
#include "qdiscord/scenario.hpp"

namespace qdiscord {

class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  double angle() {
    const double theta = uniform(0.0, 2.0 * std::numbers::pi);
    return theta < 2.0 * std::numbers::pi ? theta : 0.0;
  }

  /// Ginibre-distributed mixed state G G^dagger / tr(G G^dagger).
  template <int Dim>
  DensityMatrix<Dim> density() {
    std::normal_distribution<double> g;
    Operator<Dim> m;
    for (int i = 0; i < Dim; ++i)
      for (int j = 0; j < Dim; ++j) {
        const double re = g(rng_);
        const double im = g(rng_);
        m(i, j) = complex(re, im);
      }
    Operator<Dim> rho = m * m.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix<Dim>::from_matrix(rho);
  }

  DensityMatrix4 product_state() { return tensor(density<2>(), density<2>()); }

  /// Uniform on the set of valid (x3, T13, T33) in [-1, 1]^3.
  XFamilyState xfamily() {
    for (;;) {
      const double x3 = uniform(-1.0, 1.0);
      const double t13 = uniform(-1.0, 1.0);
      const double t33 = uniform(-1.0, 1.0);
      if (std::hypot(x3 + t33, t13) <= 1.0 && std::hypot(x3 - t33, t13) <= 1.0)
        return XFamilyState(x3, t13, t33);
    }
  }

  MeasurementParams measurement() {
    const double r = uniform();
    const double theta1 = angle();
    const double theta2 = angle();
    return MeasurementParams(r, theta1, theta2);
  }

  ScenarioPoint point(double lo = 0.0, double hi = 1.0) {
    const double lambda = uniform(lo, hi);
    const double gamma = uniform(lo, hi);
    const double p = uniform(lo, hi);
    return {lambda, gamma, p};
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qdiscord
