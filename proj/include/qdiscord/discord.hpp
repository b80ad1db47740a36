#pragma once

// Geometric and entropic quantum discord with respect to qubit A.
//
// Two routes to the entropic discord are provided: a reduced one-dimensional
// minimization valid for the X family
//     rho = 1/4 (I + x3 s3 (x) I + T13 s1 (x) s3 + T33 s3 (x) s3),
// and a brute-force minimum over the full projective-measurement manifold
// on A, which applies to any two-qubit state.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "qdiscord/golden_section.hpp"
#include "qdiscord/qcore.hpp"

namespace qdiscord {

constexpr double kGeometricNegativeTol = 1e-12;
constexpr double kEntropicNegativeTol = 1e-9;
constexpr double kZeroWeight = 1e-14;

namespace detail {

inline double clamp_nonnegative(double raw, double tol, const char* what) {
  if (raw >= 0.0) return raw;
  if (raw >= -tol) return 0.0;
  std::ostringstream msg;
  msg << what << " = " << raw << " is negative beyond tolerance " << tol;
  throw NumericalError(msg.str());
}

inline double h_clamped(double q) { return binary_entropy(std::clamp(q, 0.0, 1.0)); }

}  // namespace detail

/// Pauli coordinates (x3, T13, T33) of an X-family state; all other
/// coordinates vanish.
class XFamilyState {
 public:
  XFamilyState(double x3, double t13, double t33) : x3_(x3), t13_(t13), t33_(t33) {
    if (min_eigenvalue() < -kPsdTol) {
      std::ostringstream msg;
      msg << "X-family state (" << x3 << ", " << t13 << ", " << t33
          << ") has min eigenvalue " << min_eigenvalue();
      throw ValidationError(Invariant::positive_semidefinite, msg.str());
    }
  }

  double x3() const noexcept { return x3_; }
  double t13() const noexcept { return t13_; }
  double t33() const noexcept { return t33_; }

  /// Bloch radii of qubit A's conditional blocks for B in |0> and |1>.
  double radius_plus() const { return std::hypot(x3_ + t33_, t13_); }
  double radius_minus() const { return std::hypot(x3_ - t33_, t13_); }

  double min_eigenvalue() const {
    return 0.25 * (1.0 - std::max(radius_plus(), radius_minus()));
  }

  BlochForm bloch() const {
    BlochForm b;
    b.x(2) = x3_;
    b.t(0, 2) = t13_;
    b.t(2, 2) = t33_;
    return b;
  }

  Operator4 operator_matrix() const { return pauli_compose(bloch()); }
  DensityMatrix4 density_matrix() const {
    return DensityMatrix4::assume_valid(operator_matrix());
  }

 private:
  double x3_, t13_, t33_;
};

/// Projective measurement on qubit A parametrized by the SU(2) element
/// [[t + ic, -b + ia], [b + ia, t - ic]] with
/// t = sqrt(1-r) cos th2, a = sqrt(r) cos th1, b = sqrt(r) sin th1,
/// c = sqrt(1-r) sin th2.
class MeasurementParams {
 public:
  MeasurementParams(double r, double theta1, double theta2)
      : r_(r), theta1_(theta1), theta2_(theta2) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("measurement r outside [0, 1]");
    if (!(theta1 >= 0.0 && theta1 < two_pi))
      throw DomainError("measurement theta1 outside [0, 2 pi)");
    if (!(theta2 >= 0.0 && theta2 < two_pi))
      throw DomainError("measurement theta2 outside [0, 2 pi)");
  }

  double r() const noexcept { return r_; }
  double theta1() const noexcept { return theta1_; }
  double theta2() const noexcept { return theta2_; }

  double t() const { return std::sqrt(1.0 - r_) * std::cos(theta2_); }
  double a() const { return std::sqrt(r_) * std::cos(theta1_); }
  double b() const { return std::sqrt(r_) * std::sin(theta1_); }
  double c() const { return std::sqrt(1.0 - r_) * std::sin(theta2_); }

  double alpha() const { return 1.0 - 2.0 * r_; }
  double beta() const {
    return 2.0 * std::sqrt(r_ * (1.0 - r_)) * std::sin(theta1_ + theta2_);
  }

  /// The orthonormal pair |phi0>, |phi1> in A's computational basis.
  std::pair<Eigen::Vector2cd, Eigen::Vector2cd> basis() const {
    const double tt = t(), aa = a(), bb = b(), cc = c();
    Eigen::Vector2cd phi0(complex(tt, cc), complex(bb, aa));
    Eigen::Vector2cd phi1(complex(-bb, aa), complex(tt, -cc));
    return {phi0, phi1};
  }

 private:
  double r_, theta1_, theta2_;
};

// ---------------------------------------------------------------------------
// Geometric discord

/// 1/4 (|x|^2 + |T|_F^2 - lambda_max(x x^T + T T^T)) for any two-qubit state.
inline double geometric_discord_general(const DensityMatrix4& rho) {
  const BlochForm b = pauli_decompose(rho);
  const Eigen::Matrix3d k = b.x * b.x.transpose() + b.t * b.t.transpose();
  const double lambda_max = eigvals_hermitian(k).back();
  const double raw = 0.25 * (b.x.squaredNorm() + b.t.squaredNorm() - lambda_max);
  return detail::clamp_nonnegative(raw, kGeometricNegativeTol, "geometric discord");
}

/// Closed form of the general expression on the X family. With
/// n = x3^2 + T13^2 + T33^2 the value is (n - sqrt(n^2 - 4 x3^2 T13^2)) / 8,
/// evaluated in the cancellation-free form below.
inline double geometric_discord_xfamily(const XFamilyState& s) {
  const double n = s.x3() * s.x3() + s.t13() * s.t13() + s.t33() * s.t33();
  const double det = s.x3() * s.x3() * s.t13() * s.t13();
  if (det == 0.0) return 0.0;
  const double root = std::sqrt(
      ((s.x3() + s.t13()) * (s.x3() + s.t13()) + s.t33() * s.t33()) *
      ((s.x3() - s.t13()) * (s.x3() - s.t13()) + s.t33() * s.t33()));
  return det / (2.0 * (n + root));
}

// ---------------------------------------------------------------------------
// Conditional entropy after a projective measurement on A

namespace detail {

// p S(rho_B | phi) for the unnormalized conditional block <phi| rho |phi>.
inline double weighted_conditional_entropy(const Operator4& rho,
                                           const Eigen::Vector2cd& phi) {
  complex m00 = 0.0, m11 = 0.0, m01 = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const complex w = std::conj(phi(a)) * phi(b);
      m00 += w * rho(2 * a, 2 * b);
      m11 += w * rho(2 * a + 1, 2 * b + 1);
      m01 += w * rho(2 * a, 2 * b + 1);
    }
  }
  const double weight = m00.real() + m11.real();
  if (weight <= kZeroWeight) return 0.0;
  const auto eig = eigvals_2x2(m00.real(), m11.real(), std::norm(m01));
  return weight * h_clamped(eig[1] / weight);
}

}  // namespace detail

/// sum_i p_i S(rho_i^B) for the measurement {|phi0>, |phi1>} on A.
inline double measured_conditional_entropy(const DensityMatrix4& rho,
                                           const MeasurementParams& m) {
  const auto [phi0, phi1] = m.basis();
  return detail::weighted_conditional_entropy(rho.matrix(), phi0) +
         detail::weighted_conditional_entropy(rho.matrix(), phi1);
}

namespace detail {

// 1/2 w h(num / (2 w)), zero when the outcome weight vanishes.
inline double weighted_h(double w, double num) {
  if (0.5 * w <= kZeroWeight) return 0.0;
  return 0.5 * w * h_clamped(num / (2.0 * w));
}

}  // namespace detail

/// Measured conditional entropy of an X-family state as a function of the
/// measurement's Bloch coordinates alpha (z) and beta (x), alpha^2 + beta^2 <= 1.
inline double reduced_conditional_entropy(const XFamilyState& s, double alpha,
                                          double beta) {
  const double ax = alpha * s.x3();
  const double shift = alpha * (s.x3() + s.t33()) + beta * s.t13();
  return detail::weighted_h(1.0 + ax, 1.0 + shift) +
         detail::weighted_h(1.0 - ax, 1.0 - shift);
}

/// reduced_conditional_entropy on the unit circle, theta in [0, pi].
inline double circle_conditional_entropy(double theta, const XFamilyState& s) {
  constexpr double slack = 1e-12;
  if (!(theta >= -slack && theta <= std::numbers::pi + slack)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " outside [0, pi]";
    throw DomainError(msg.str());
  }
  return reduced_conditional_entropy(s, std::cos(theta), std::sin(theta));
}

struct CircleMinimum {
  double theta;
  double value;
};

constexpr std::size_t kCircleScanPoints = 1024;
constexpr std::size_t kRefinedBasins = 3;
constexpr double kThetaTol = 1e-10;

/// Global minimum of circle_conditional_entropy over [0, pi]: a uniform scan
/// followed by golden-section refinement of the three lowest scan basins.
/// Ties resolve to the smallest theta.
inline CircleMinimum minimize_conditional_entropy(const XFamilyState& s) {
  constexpr std::size_t n = kCircleScanPoints;
  const double step = std::numbers::pi / static_cast<double>(n - 1);
  const auto theta_at = [&](std::size_t k) {
    return k + 1 == n ? std::numbers::pi : static_cast<double>(k) * step;
  };
  const auto f = [&](double theta) {
    return reduced_conditional_entropy(s, std::cos(theta), std::sin(theta));
  };

  std::array<double, n> values{};
  for (std::size_t k = 0; k < n; ++k) values[k] = f(theta_at(k));

  std::vector<std::size_t> basins;
  for (std::size_t k = 0; k < n; ++k) {
    const bool left_ok = k == 0 || values[k] <= values[k - 1];
    const bool right_ok = k + 1 == n || values[k] <= values[k + 1];
    if (left_ok && right_ok) basins.push_back(k);
  }
  std::stable_sort(basins.begin(), basins.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  if (basins.size() > kRefinedBasins) basins.resize(kRefinedBasins);

  CircleMinimum best{theta_at(basins.front()), values[basins.front()]};
  const auto consider = [&](double theta, double value) {
    if (value < best.value || (value == best.value && theta < best.theta))
      best = {theta, value};
  };
  for (std::size_t k : basins) {
    consider(theta_at(k), values[k]);
    const double lo = theta_at(k == 0 ? 0 : k - 1);
    const double hi = theta_at(k + 1 == n ? k : k + 1);
    const auto refined = golden_section_minimize(f, lo, hi, kThetaTol);
    consider(refined.x, refined.value);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Entropic discord

/// S(rho^A) for an X-family state.
inline double entropy_a_closed_form(const XFamilyState& s) {
  return detail::h_clamped(0.5 * (1.0 + s.x3()));
}

/// S(rho) for an X-family state: two conditional blocks of weight 1/2 each.
inline double entropy_closed_form(const XFamilyState& s) {
  return 1.0 + 0.5 * detail::h_clamped(0.5 * (1.0 + s.radius_plus())) +
         0.5 * detail::h_clamped(0.5 * (1.0 + s.radius_minus()));
}

struct EntropicDiscord {
  double value;            // clamped to >= 0
  double raw;              // S(rho^A) - S(rho) + min conditional entropy
  double theta_star;       // minimizing measurement angle in [0, pi]
  double entropy_a;        // S(rho^A)
  double entropy;          // S(rho)
  double min_conditional;  // min over theta of the conditional entropy
};

inline EntropicDiscord entropic_discord_xfamily(const XFamilyState& s) {
  const CircleMinimum min = minimize_conditional_entropy(s);
  EntropicDiscord d{};
  d.entropy_a = entropy_a_closed_form(s);
  d.entropy = entropy_closed_form(s);
  d.min_conditional = min.value;
  d.theta_star = min.theta;
  d.raw = d.entropy_a - d.entropy + min.value;
  d.value = detail::clamp_nonnegative(d.raw, kEntropicNegativeTol, "entropic discord");
  return d;
}

constexpr std::size_t kMinOracleResolution = 64;

/// Entropic discord of an arbitrary state by exhaustive search: r on n_r
/// points of [0, 1] and theta1, theta2 each on n_t points of [0, 2 pi).
/// Entropies come from eigenvalues, so nothing here relies on the X-family
/// reduction.
inline double entropic_discord_bruteforce(const DensityMatrix4& rho, std::size_t n_r,
                                          std::size_t n_t) {
  if (n_r < kMinOracleResolution || n_t < kMinOracleResolution)
    throw DomainError("brute-force resolutions must be >= 64");

  const Operator4& m = rho.matrix();
  const double s_a = von_neumann_entropy(partial_trace_B(rho));
  const double s_ab = von_neumann_entropy(rho);

  std::vector<double> cos_t(n_t), sin_t(n_t);
  for (std::size_t j = 0; j < n_t; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(n_t);
    cos_t[j] = std::cos(theta);
    sin_t[j] = std::sin(theta);
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_r; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(n_r - 1);
    const double sr = std::sqrt(r);
    const double sr1 = std::sqrt(1.0 - r);
    for (std::size_t j1 = 0; j1 < n_t; ++j1) {
      const double a = sr * cos_t[j1];
      const double b = sr * sin_t[j1];
      for (std::size_t j2 = 0; j2 < n_t; ++j2) {
        const double t = sr1 * cos_t[j2];
        const double c = sr1 * sin_t[j2];
        const Eigen::Vector2cd phi0(complex(t, c), complex(b, a));
        const Eigen::Vector2cd phi1(complex(-b, a), complex(t, -c));
        const double value = detail::weighted_conditional_entropy(m, phi0) +
                             detail::weighted_conditional_entropy(m, phi1);
        best = std::min(best, value);
      }
    }
  }
  return detail::clamp_nonnegative(s_a - s_ab + best, kEntropicNegativeTol,
                                   "brute-force entropic discord");
}

// ---------------------------------------------------------------------------
// Boundary-minimum property of the reduced conditional entropy

struct BoundaryCheck {
  bool passed;
  double disc_min;
  double circle_min;
};

constexpr double kBoundarySlack = 1e-9;

/// Compares the minimum of reduced_conditional_entropy over an n x n grid of
/// the closed unit disc with its minimum over the unit circle.
inline BoundaryCheck boundary_minimum_check(const XFamilyState& s, std::size_t n) {
  if (n < 100) throw DomainError("boundary grid must be at least 100 x 100");

  double disc_min = std::numeric_limits<double>::infinity();
  const auto coord = [n](std::size_t i) {
    return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = coord(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double beta = coord(j);
      if (alpha * alpha + beta * beta > 1.0) continue;
      disc_min = std::min(disc_min, reduced_conditional_entropy(s, alpha, beta));
    }
  }

  // Full circle, not just the upper half, so the sign symmetry is not assumed.
  double circle_min = minimize_conditional_entropy(s).value;
  const std::size_t m = 4 * n;
  for (std::size_t k = 0; k < m; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    circle_min = std::min(circle_min,
                          reduced_conditional_entropy(s, std::cos(theta), std::sin(theta)));
  }
  return {disc_min >= circle_min - kBoundarySlack, disc_min, circle_min};
}

}  // namespace qdiscord
