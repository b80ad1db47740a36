#pragma once

// Dense 2x2 / 4x4 operator primitives for two-qubit states.
//
// Basis ordering is |00>, |01>, |10>, |11> with qubit A as the first tensor
// factor, so the flat index of |a b> is 2*a + b. All entropies are in bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <sstream>

#include <Eigen/Dense>

#include "qdiscord/errors.hpp"

namespace qdiscord {

using complex = std::complex<double>;

template <int Dim>
using Operator = Eigen::Matrix<complex, Dim, Dim>;
using Operator2 = Operator<2>;
using Operator4 = Operator<4>;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kProbabilityTol = 1e-12;

namespace pauli {

inline Operator2 identity() { return Operator2::Identity(); }

inline Operator2 x() {
  Operator2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Operator2 y() {
  Operator2 m;
  m << 0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0;
  return m;
}

inline Operator2 z() {
  Operator2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// sigma_1, sigma_2, sigma_3 for i = 0, 1, 2.
inline Operator2 sigma(int i) {
  switch (i) {
    case 0:
      return x();
    case 1:
      return y();
    default:
      return z();
  }
}

}  // namespace pauli

inline Operator4 kron(const Operator2& a, const Operator2& b) {
  Operator4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

template <int Dim>
double hermiticity_defect(const Operator<Dim>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace detail {

// Closed form for a 2x2 Hermitian matrix, ascending.
inline std::array<double, 2> eigvals_2x2(double a, double d, double off_abs2) {
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double radius = std::sqrt(half * half + off_abs2);
  return {mean - radius, mean + radius};
}

template <int Dim, typename Matrix>
std::array<double, Dim> selfadjoint_eigvals(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  std::array<double, Dim> out{};
  for (int i = 0; i < Dim; ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Ascending eigenvalues of a Hermitian 2x2 or 4x4 operator.
template <int Dim>
std::array<double, Dim> eigvals_hermitian(const Operator<Dim>& m) {
  static_assert(Dim == 2 || Dim == 4, "only qubit and two-qubit operators");
  const double defect = hermiticity_defect<Dim>(m);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << defect;
    throw ValidationError(Invariant::hermitian, msg.str());
  }
  if constexpr (Dim == 2) {
    return detail::eigvals_2x2(m(0, 0).real(), m(1, 1).real(),
                               std::norm(m(0, 1)));
  } else {
    return detail::selfadjoint_eigvals<Dim>(m);
  }
}

/// Ascending eigenvalues of a real symmetric 3x3 matrix.
inline std::array<double, 3> eigvals_hermitian(const Eigen::Matrix3d& m) {
  const double defect = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "max |M - M^T| = " << defect;
    throw ValidationError(Invariant::hermitian, msg.str());
  }
  return detail::selfadjoint_eigvals<3>(m);
}

/// Throws ValidationError naming the first violated invariant.
template <int Dim>
void validate_density(const Operator<Dim>& m) {
  const auto eig = eigvals_hermitian<Dim>(m);  // checks hermiticity
  const complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "trace = " << tr;
    throw ValidationError(Invariant::unit_trace, msg.str());
  }
  if (eig.front() < -kPsdTol) {
    std::ostringstream msg;
    msg << "min eigenvalue = " << eig.front();
    throw ValidationError(Invariant::positive_semidefinite, msg.str());
  }
}

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
template <int Dim>
class DensityMatrix {
 public:
  using Matrix = Operator<Dim>;

  static DensityMatrix from_matrix(const Matrix& m) {
    validate_density<Dim>(m);
    return DensityMatrix(m);
  }

  /// For results that are valid by construction (partial traces, channel
  /// outputs of valid inputs). No checks are performed.
  static DensityMatrix assume_valid(const Matrix& m) { return DensityMatrix(m); }

  static DensityMatrix maximally_mixed() {
    return DensityMatrix(Matrix::Identity() / static_cast<double>(Dim));
  }

  const Matrix& matrix() const noexcept { return m_; }
  complex operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(const Matrix& m) : m_(m) {}
  Matrix m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

inline DensityMatrix2 pure_state(const Eigen::Vector2cd& psi) {
  return DensityMatrix2::from_matrix(psi * psi.adjoint() / psi.squaredNorm());
}

inline DensityMatrix4 tensor(const DensityMatrix2& a, const DensityMatrix2& b) {
  return DensityMatrix4::assume_valid(kron(a.matrix(), b.matrix()));
}

/// Real Pauli-basis coordinates of a two-qubit operator:
/// rho = 1/4 (I + sum x_i s_i (x) I + sum y_j I (x) s_j + sum T_ij s_i (x) s_j).
struct BlochForm {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();

  double max_abs_entry() const {
    return std::max({x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff(),
                     t.cwiseAbs().maxCoeff()});
  }
};

/// Builds the operator from its Pauli coordinates. The result need not be a
/// state; use DensityMatrix4::from_matrix to validate it.
inline Operator4 pauli_compose(const BlochForm& b) {
  const Operator2 id = pauli::identity();
  Operator4 m = kron(id, id);
  for (int i = 0; i < 3; ++i) {
    m += b.x(i) * kron(pauli::sigma(i), id);
    m += b.y(i) * kron(id, pauli::sigma(i));
    for (int j = 0; j < 3; ++j)
      m += b.t(i, j) * kron(pauli::sigma(i), pauli::sigma(j));
  }
  return m / 4.0;
}

namespace detail {

inline double real_trace(const Operator4& m, const char* what) {
  const complex tr = m.trace();
  if (std::abs(tr.imag()) > kHermitianTol) {
    std::ostringstream msg;
    msg << "imaginary Pauli coefficient " << tr.imag() << " for " << what;
    throw ValidationError(Invariant::hermitian, msg.str());
  }
  return tr.real();
}

}  // namespace detail

/// Pauli coordinates of a Hermitian, unit-trace operator (PSD not required).
inline BlochForm pauli_decompose(const Operator4& rho) {
  const double defect = hermiticity_defect<4>(rho);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << defect;
    throw ValidationError(Invariant::hermitian, msg.str());
  }
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "trace = " << rho.trace();
    throw ValidationError(Invariant::unit_trace, msg.str());
  }
  const Operator2 id = pauli::identity();
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x(i) = detail::real_trace(rho * kron(pauli::sigma(i), id), "x");
    b.y(i) = detail::real_trace(rho * kron(id, pauli::sigma(i)), "y");
    for (int j = 0; j < 3; ++j)
      b.t(i, j) =
          detail::real_trace(rho * kron(pauli::sigma(i), pauli::sigma(j)), "T");
  }
  return b;
}

inline BlochForm pauli_decompose(const DensityMatrix4& rho) {
  return pauli_decompose(rho.matrix());
}

/// Reduced state of qubit A.
inline DensityMatrix2 partial_trace_B(const DensityMatrix4& rho) {
  Operator2 out = Operator2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
  return DensityMatrix2::assume_valid(out);
}

/// Reduced state of qubit B.
inline DensityMatrix2 partial_trace_A(const DensityMatrix4& rho) {
  Operator2 out = Operator2::Zero();
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i) out(k, l) += rho(2 * i + k, 2 * i + l);
  return DensityMatrix2::assume_valid(out);
}

/// -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0. Arguments up to
/// kProbabilityTol outside [0, 1] are clamped.
inline double binary_entropy(double x) {
  if (!(x >= -kProbabilityTol && x <= 1.0 + kProbabilityTol)) {
    std::ostringstream msg;
    msg << "binary_entropy argument " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

/// Shannon entropy of a spectrum. Eigenvalues in [-kPsdTol, 0) count as 0.
inline double entropy_from_eigenvalues(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kPsdTol) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda;
      throw ValidationError(Invariant::positive_semidefinite, msg.str());
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

template <int Dim>
double von_neumann_entropy(const DensityMatrix<Dim>& rho) {
  const auto eig = eigvals_hermitian<Dim>(rho.matrix());
  return entropy_from_eigenvalues(eig);
}

}  // namespace qdiscord
