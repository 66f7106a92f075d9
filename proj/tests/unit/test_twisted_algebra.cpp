#include <gtest/gtest.h>

#include <random>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"
#include "latdim/twisted_algebra.hpp"

using namespace latdim;

namespace {

double diff(const AlgebraElement& a, const AlgebraElement& b) {
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

AlgebraElement random_element(const Cocycle& c, std::mt19937_64& rng) {
  return AlgebraElement(c, random_complex_normal(static_cast<Eigen::Index>(c.group().order()), 1, rng));
}

}  // namespace

TEST(Regular, Z2Matrices) {
  const auto c = trivial_cocycle(build_cyclic(2));
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_EQ(left_regular(c).matrices[1], swap);
  EXPECT_EQ(right_regular(c).matrices[1], swap);
}

TEST(Regular, IdentityAndComposition) {
  const auto wh = weyl_heisenberg(build_named("Z2xZ2"));
  const auto& g = wh.group();
  const auto left = left_regular(wh);
  const auto right = right_regular(wh);
  const auto n = static_cast<Eigen::Index>(g.order());
  EXPECT_EQ(left.matrices[g.identity()], Matrix::Identity(n, n));
  EXPECT_EQ(right.matrices[g.identity()], Matrix::Identity(n, n));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      EXPECT_LT(max_abs_diff(left.matrices[x] * left.matrices[y], wh(x, y) * left.matrices[g.mul(x, y)]), 1e-14);
      EXPECT_LT(max_abs_diff(right.matrices[x] * right.matrices[y], wh(x, y) * right.matrices[g.mul(x, y)]), 1e-14);
    }
}

TEST(Regular, Commutant) {
  EXPECT_EQ(verify_commutant(trivial_cocycle(build_cyclic(3))), 0.0);
  EXPECT_LT(verify_commutant(trivial_cocycle(build_symmetric(3))), 1e-12);
  EXPECT_LT(verify_commutant(weyl_heisenberg(build_cyclic(4))), 1e-12);
}

TEST(Convolution, DeltaIdentities) {
  const auto wh = weyl_heisenberg(build_cyclic(3));
  const auto& g = wh.group();
  std::mt19937_64 rng(3);
  const Vector f = random_complex_normal(9, 1, rng);
  EXPECT_LT((twisted_convolution(AlgebraElement::unit(wh).coeffs(), f, wh) - f).norm(), 1e-14);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const Vector prod = twisted_convolution(AlgebraElement::basis(wh, x).coeffs(),
                                              AlgebraElement::basis(wh, y).coeffs(), wh);
      Vector expected = Vector::Zero(9);
      expected(g.mul(x, y)) = wh(x, y);
      EXPECT_LT((prod - expected).norm(), 1e-14);
    }
}

TEST(Convolution, TrivialCocycleMatchesDoubleLoop) {
  const auto g = build_cyclic(6);
  const auto c = trivial_cocycle(g);
  std::mt19937_64 rng(4);
  const Vector f = random_complex_normal(6, 1, rng), h = random_complex_normal(6, 1, rng);
  Vector direct = Vector::Zero(6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) direct((x + y) % 6) += f(x) * h(y);
  EXPECT_LT((twisted_convolution(f, h, c) - direct).norm(), 1e-13);
  EXPECT_LT((convolution_matrix(f, c) * h - direct).norm(), 1e-13);
}

TEST(Algebra, OperatorRoundTripAndAdjoint) {
  const auto wh = weyl_heisenberg(build_cyclic(4));
  std::mt19937_64 rng(5);
  const auto a = random_element(wh, rng);
  const auto b = random_element(wh, rng);
  EXPECT_LT(diff(AlgebraElement::from_operator(wh, a.operator_matrix()), a), 1e-14);
  EXPECT_LT(max_abs_diff(a.adjoint().operator_matrix(), a.operator_matrix().adjoint()), 1e-13);
  EXPECT_LT(max_abs_diff((a * b).operator_matrix(), a.operator_matrix() * b.operator_matrix()), 1e-12);
  EXPECT_THROW(AlgebraElement(wh, Vector::Zero(3)), Error);
}

TEST(Tau, Values) {
  const auto c = trivial_cocycle(build_symmetric(3));
  EXPECT_EQ(trace_tau(AlgebraElement::unit(c)), Complex(1.0));
  for (Element g = 1; g < 6; ++g) EXPECT_EQ(trace_tau(AlgebraElement::basis(c, g)), Complex(0.0));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_element(c, rng), b = random_element(c, rng);
    EXPECT_LT(std::abs(trace_tau(a * b) - trace_tau(b * a)), 1e-12);
  }
}

TEST(CenterValuedTrace, AbelianTrivialIsIdentity) {
  const auto c = trivial_cocycle(build_named("Z2xZ4"));
  std::mt19937_64 rng(7);
  const auto a = random_element(c, rng);
  EXPECT_LT(diff(center_valued_trace(a), a), 1e-14);
}

TEST(CenterValuedTrace, S3TranspositionAveragesItsClass) {
  const auto c = trivial_cocycle(build_symmetric(3));
  // Elements 1, 2 and 5 are the transpositions.
  Vector expected = Vector::Zero(6);
  expected(1) = expected(2) = expected(5) = 1.0 / 3.0;
  EXPECT_LT((center_valued_trace(AlgebraElement::basis(c, 1)).coeffs() - expected).norm(), 1e-14);
  EXPECT_LT(diff(center_valued_trace_oracle(AlgebraElement::basis(c, 1)), center_valued_trace(AlgebraElement::basis(c, 1))),
            1e-10);
}

TEST(CenterValuedTrace, FactorCollapsesToTau) {
  const auto wh = weyl_heisenberg(build_cyclic(3));
  for (Element g = 1; g < 9; ++g)
    EXPECT_LT(center_valued_trace(AlgebraElement::basis(wh, g)).coeffs().norm(), 1e-14);
  std::mt19937_64 rng(8);
  const auto a = random_element(wh, rng);
  EXPECT_LT(diff(center_valued_trace(a), trace_tau(a) * AlgebraElement::unit(wh)), 1e-13);
}

TEST(CenterValuedTrace, OracleOnQ8AndIdentity) {
  const auto c = trivial_cocycle(build_quaternion());
  EXPECT_LT(diff(center_valued_trace_oracle(AlgebraElement::unit(c)), AlgebraElement::unit(c)), 1e-14);
  std::mt19937_64 rng(9);
  const auto b = random_element(c, rng);
  const auto a = b + b.adjoint();
  EXPECT_LT(diff(center_valued_trace_oracle(a), center_valued_trace(a)), 1e-10);
}

TEST(CenterValuedTrace, IsCentralAndTauPreserving) {
  const auto c = trivial_cocycle(build_dihedral(4));
  std::mt19937_64 rng(10);
  const auto left = left_regular(c);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_element(c, rng);
    const Matrix t = center_valued_trace(a).operator_matrix();
    for (const auto& l : left.matrices) EXPECT_LT(max_abs_diff(t * l, l * t), 1e-12);
    EXPECT_LT(std::abs(trace_tau(center_valued_trace(a)) - trace_tau(a)), 1e-12);
  }
}

TEST(Psd, Verdicts) {
  const auto c = trivial_cocycle(build_cyclic(5));
  const Vector delta = AlgebraElement::unit(c).coeffs();
  const auto yes = is_sigma_positive_definite(delta, c);
  EXPECT_TRUE(yes.psd);
  EXPECT_NEAR(yes.min_eigenvalue, 1.0, 1e-14);
  EXPECT_FALSE(is_sigma_positive_definite(-delta, c).psd);
  std::mt19937_64 rng(11);
  const auto b = random_element(c, rng);
  EXPECT_TRUE(is_sigma_positive_definite((b.adjoint() * b).coeffs(), c).psd);
  // A non-self-adjoint operator is never positive.
  Vector skew = Vector::Zero(5);
  skew(1) = 1.0;
  const auto no = is_sigma_positive_definite(skew, c);
  EXPECT_FALSE(no.psd);
  EXPECT_GT(no.asymmetry, 0.5);
}

TEST(Psd, AgreesWithOperatorSpectrum) {
  const auto wh = weyl_heisenberg(build_cyclic(2));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto b = random_element(wh, rng);
    const auto h = b + b.adjoint();
    const RealVector eig = hermitian_eigenvalues(h.operator_matrix());
    EXPECT_EQ(is_sigma_positive_definite(h.coeffs(), wh).psd, eig.minCoeff() >= -1e-9);
  }
}

TEST(Center, Dimension) {
  EXPECT_EQ(center_dimension(trivial_cocycle(build_symmetric(3))), 3u);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(center_dimension(trivial_cocycle(build_cyclic(n))), n);
    EXPECT_EQ(center_dimension(weyl_heisenberg(build_cyclic(n))), 1u) << n;
  }
}
