#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdiscord/qcore.hpp"
#include "qdiscord/random.hpp"

namespace qdiscord {
namespace {

Operator4 basis_projector4(int index) {
  Operator4 m = Operator4::Zero();
  m(index, index) = 1.0;
  return m;
}

Operator2 diag2(double a, double b) {
  Operator2 m = Operator2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// (x3, T13, T33) = (0.5, 1/sqrt2, 0) written out by hand in the computational basis.
Operator4 xfamily_example() {
  const double x3 = 0.5, t13 = std::sqrt(0.5);
  Operator4 m = Operator4::Zero();
  m(0, 0) = m(1, 1) = 1.0 + x3;
  m(2, 2) = m(3, 3) = 1.0 - x3;
  m(0, 2) = m(2, 0) = t13;
  m(1, 3) = m(3, 1) = -t13;
  return m / 4.0;
}

TEST(PauliDecompose, MaximallyMixedHasNoCoordinates) {
  const BlochForm b = pauli_decompose(DensityMatrix4::maximally_mixed());
  EXPECT_EQ(b.max_abs_entry(), 0.0);
}

TEST(PauliDecompose, ProductOfZEigenstates) {
  const BlochForm b = pauli_decompose(DensityMatrix4::from_matrix(basis_projector4(0)));
  EXPECT_NEAR(b.x(2), 1.0, 1e-15);
  EXPECT_NEAR(b.y(2), 1.0, 1e-15);
  EXPECT_NEAR(b.t(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(b.x.head<2>().norm() + b.y.head<2>().norm(), 0.0, 1e-15);
  Eigen::Matrix3d rest = b.t;
  rest(2, 2) = 0.0;
  EXPECT_NEAR(rest.norm(), 0.0, 1e-15);
}

TEST(PauliDecompose, RecoversXFamilyTriple) {
  const BlochForm b = pauli_decompose(DensityMatrix4::from_matrix(xfamily_example()));
  EXPECT_NEAR(b.x(2), 0.5, 1e-12);
  EXPECT_NEAR(b.t(0, 2), 0.70710678118654752, 1e-12);
  EXPECT_NEAR(b.t(2, 2), 0.0, 1e-12);
  BlochForm rest = b;
  rest.x(2) = rest.t(0, 2) = rest.t(2, 2) = 0.0;
  EXPECT_LE(rest.max_abs_entry(), 1e-12);
}

TEST(PauliDecompose, RejectsNonHermitian) {
  Operator4 m = Operator4::Identity() / 4.0;
  m(0, 1) = 0.1;
  try {
    pauli_decompose(m);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violated(), Invariant::hermitian);
  }
}

TEST(PauliDecompose, RejectsWrongTrace) {
  try {
    pauli_decompose(Operator4(Operator4::Identity() / 2.0));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violated(), Invariant::unit_trace);
  }
}

TEST(PauliCompose, BasicForms) {
  EXPECT_NEAR((pauli_compose(BlochForm{}) - Operator4::Identity() / 4.0).norm(), 0.0, 1e-15);

  BlochForm b;
  b.x(2) = b.y(2) = b.t(2, 2) = 1.0;
  EXPECT_NEAR((pauli_compose(b) - basis_projector4(0)).norm(), 0.0, 1e-15);

  BlochForm f;
  f.x(2) = 0.5;
  f.t(0, 2) = std::sqrt(0.5);
  EXPECT_NEAR((pauli_compose(f) - xfamily_example()).norm(), 0.0, 1e-15);
}

TEST(PauliCompose, StaysPermissiveForNonStates) {
  BlochForm b;
  b.x(2) = 3.0;  // not a state
  const Operator4 m = pauli_compose(b);
  EXPECT_THROW(DensityMatrix4::from_matrix(m), ValidationError);
}

TEST(PauliRoundTrip, RandomStates) {
  StateSampler rng(1);
  for (int n = 0; n < 200; ++n) {
    const auto rho = rng.density<4>();
    const BlochForm b = pauli_decompose(rho);
    EXPECT_LE(b.max_abs_entry(), 1.0 + 1e-12);
    EXPECT_LE((pauli_compose(b) - rho.matrix()).norm(), 1e-12);
  }
}

TEST(PartialTrace, ExamplesOverB) {
  EXPECT_NEAR((partial_trace_B(DensityMatrix4::maximally_mixed()).matrix() -
               Operator2::Identity() / 2.0)
                  .norm(),
              0.0, 1e-15);
  EXPECT_NEAR((partial_trace_B(DensityMatrix4::from_matrix(basis_projector4(1))).matrix() -
               diag2(1, 0))
                  .norm(),
              0.0, 1e-15);
  EXPECT_NEAR(
      (partial_trace_B(DensityMatrix4::from_matrix(xfamily_example())).matrix() -
       diag2(0.75, 0.25))
          .norm(),
      0.0, 1e-15);
}

TEST(PartialTrace, ExamplesOverA) {
  EXPECT_NEAR((partial_trace_A(DensityMatrix4::maximally_mixed()).matrix() -
               Operator2::Identity() / 2.0)
                  .norm(),
              0.0, 1e-15);
  EXPECT_NEAR((partial_trace_A(DensityMatrix4::from_matrix(basis_projector4(1))).matrix() -
               diag2(0, 1))
                  .norm(),
              0.0, 1e-15);
  EXPECT_NEAR((partial_trace_A(DensityMatrix4::from_matrix(xfamily_example())).matrix() -
               Operator2::Identity() / 2.0)
                  .norm(),
              0.0, 1e-15);
}

TEST(PartialTrace, TensorProductMarginals) {
  StateSampler rng(2);
  for (int n = 0; n < 50; ++n) {
    const auto a = rng.density<2>();
    const auto b = rng.density<2>();
    const auto ab = tensor(a, b);
    EXPECT_LE((partial_trace_B(ab).matrix() - a.matrix()).norm(), 1e-14);
    EXPECT_LE((partial_trace_A(ab).matrix() - b.matrix()).norm(), 1e-14);
  }
}

TEST(BinaryEntropy, EndpointsAndCenter) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_NEAR(binary_entropy(0.25), 0.811278124459132864, 1e-15);
  EXPECT_EQ(binary_entropy(-1e-13), 0.0);
  EXPECT_EQ(binary_entropy(1.0 + 1e-13), 0.0);
}

TEST(BinaryEntropy, RejectsOutOfRange) {
  EXPECT_THROW(binary_entropy(-1e-6), DomainError);
  EXPECT_THROW(binary_entropy(1.1), DomainError);
  EXPECT_THROW(binary_entropy(std::nan("")), DomainError);
}

TEST(BinaryEntropy, SymmetricOnGrid) {
  for (int k = 0; k < 1000; ++k) {
    const double x = k / 999.0;
    EXPECT_NEAR(binary_entropy(x), binary_entropy(1.0 - x), 1e-15) << x;
  }
}

TEST(VonNeumannEntropy, Examples) {
  EXPECT_EQ(von_neumann_entropy(DensityMatrix2::from_matrix(diag2(1, 0))), 0.0);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix2::maximally_mixed()), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix2::from_matrix(diag2(0.75, 0.25))),
              0.811278124459132864, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix4::maximally_mixed()), 2.0, 1e-14);
}

TEST(VonNeumannEntropy, DiagonalMatchesBinaryEntropy) {
  for (int k = 0; k < 1000; ++k) {
    const double x = k / 999.0;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix2::from_matrix(diag2(x, 1.0 - x))),
                binary_entropy(x), 1e-12);
  }
}

TEST(VonNeumannEntropy, BoundedByLogDimension) {
  StateSampler rng(3);
  for (int n = 0; n < 200; ++n) {
    const double s = von_neumann_entropy(rng.density<4>());
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 2.0 + 1e-12);
  }
}

TEST(EntropyFromEigenvalues, ClipsResidueAndRejectsNegative) {
  const double ok[] = {-5e-11, 0.5, 0.5};
  EXPECT_NEAR(entropy_from_eigenvalues(ok), 1.0, 1e-15);
  const double bad[] = {-1e-6, 0.5, 0.5};
  try {
    entropy_from_eigenvalues(bad);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violated(), Invariant::positive_semidefinite);
  }
}

TEST(Eigvals, Examples) {
  for (double v : eigvals_hermitian<2>(Operator2::Identity())) EXPECT_DOUBLE_EQ(v, 1.0);
  for (double v : eigvals_hermitian<4>(Operator4::Identity())) EXPECT_NEAR(v, 1.0, 1e-15);
  for (double v : eigvals_hermitian(Eigen::Matrix3d::Identity())) EXPECT_NEAR(v, 1.0, 1e-15);

  const auto e3 = eigvals_hermitian(Eigen::Vector3d(3, 1, 2).asDiagonal().toDenseMatrix());
  EXPECT_NEAR(e3[0], 1.0, 1e-15);
  EXPECT_NEAR(e3[1], 2.0, 1e-15);
  EXPECT_NEAR(e3[2], 3.0, 1e-15);

  Operator2 m;
  m << 2.0, 1.0, 1.0, 2.0;
  const auto e2 = eigvals_hermitian<2>(m);
  const auto [lo, hi] = oracle::eig2_by_characteristic(2.0, 1.0, 2.0);
  EXPECT_NEAR(e2[0], lo, 1e-15);
  EXPECT_NEAR(e2[1], hi, 1e-15);
  EXPECT_NEAR(e2[0], 1.0, 1e-15);
  EXPECT_NEAR(e2[1], 3.0, 1e-15);
}

TEST(Eigvals, RejectsNonHermitian) {
  Operator2 m;
  m << 1.0, 1.0, 0.0, 1.0;
  EXPECT_THROW(eigvals_hermitian<2>(m), ValidationError);
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  r(0, 2) = 1e-6;
  EXPECT_THROW(eigvals_hermitian(r), ValidationError);
}

TEST(Eigvals, FourByFourMatchesTraceAndDeterminant) {
  StateSampler rng(4);
  for (int n = 0; n < 100; ++n) {
    const auto rho = rng.density<4>();
    const auto e = eigvals_hermitian<4>(rho.matrix());
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    EXPECT_NEAR(e[0] + e[1] + e[2] + e[3], 1.0, 1e-13);
    EXPECT_NEAR(e[0] * e[1] * e[2] * e[3], rho.matrix().determinant().real(), 1e-14);
  }
}

TEST(DensityMatrix, ValidationNamesInvariant) {
  Operator2 neg = diag2(1.5, -0.5);
  try {
    DensityMatrix2::from_matrix(neg);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violated(), Invariant::positive_semidefinite);
  }
  try {
    DensityMatrix2::from_matrix(diag2(0.5, 0.6));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violated(), Invariant::unit_trace);
  }
  // Within the PSD window.
  EXPECT_NO_THROW(DensityMatrix2::from_matrix(diag2(1.0 + 5e-11, -5e-11)));
}

}  // namespace
}  // namespace qdiscord
