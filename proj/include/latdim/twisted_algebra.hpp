#pragma once

#include <span>
#include <utility>
#include <vector>

#include "latdim/cocycle.hpp"
#include "latdim/config.hpp"
#include "latdim/types.hpp"

namespace latdim {

enum class Side { Left, Right };

/// Twisted regular representation on l2(G); column y of each matrix holds
/// the image of delta_y.
struct RegularRep {
  Side side = Side::Left;
  std::vector<Matrix> matrices;
};

/// lambda(x) f(y) = sigma(x, x^{-1} y) f(x^{-1} y), i.e. lambda(x) delta_y = sigma(x,y) delta_{xy}.
RegularRep left_regular(const Cocycle& c);
/// rho(x) f(y) = sigma(y, x) f(y x).
RegularRep right_regular(const Cocycle& c);

/// max over x, y of max|[lambda_sigma(x), rho_conj(sigma)(y)]|.
double verify_commutant(const Cocycle& c);

/// (f * g)(gamma) = sum_g' sigma(g', g'^{-1} gamma) f(g') g(g'^{-1} gamma)
Vector twisted_convolution(const Vector& f, const Vector& g, const Cocycle& c);

/// Matrix of f -> phi * f, i.e. sum_gamma phi(gamma) lambda_sigma(gamma).
Matrix convolution_matrix(const Vector& phi, const Cocycle& c);

/// An element sum_gamma coeffs[gamma] lambda_sigma(gamma) of the twisted
/// group algebra; coeffs is its Fourier coefficient a delta_e.
class AlgebraElement {
 public:
  /// Throws DimensionMismatch unless coeffs has one entry per group element.
  AlgebraElement(Cocycle cocycle, Vector coeffs);

  static AlgebraElement unit(const Cocycle& c);
  static AlgebraElement basis(const Cocycle& c, Element gamma);
  /// Reads the Fourier coefficient a delta_e off an operator on l2(G).
  static AlgebraElement from_operator(const Cocycle& c, const Matrix& op);

  const Cocycle& cocycle() const noexcept { return cocycle_; }
  const Vector& coeffs() const noexcept { return coeffs_; }

  Matrix operator_matrix() const { return convolution_matrix(coeffs_, cocycle_); }
  AlgebraElement adjoint() const;

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Complex s, const AlgebraElement& a);

 private:
  Cocycle cocycle_;
  Vector coeffs_;
};

/// tau(a) = <a delta_e, delta_e>
Complex trace_tau(const AlgebraElement& a);

/// Tr(lambda(gamma)) for every gamma as a sparse expansion over group
/// elements: the class-average formula on regular classes, 0 elsewhere.
std::vector<std::vector<std::pair<Element, Complex>>> center_trace_images(
    const Cocycle& c, const Tolerances& tol = kDefaultTolerances);

AlgebraElement center_valued_trace(const AlgebraElement& a, const Tolerances& tol = kDefaultTolerances);

/// Independent route: average lambda(beta)* a lambda(beta) over the group
/// and read back the Fourier coefficient.
AlgebraElement center_valued_trace_oracle(const AlgebraElement& a);

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  /// max|M - M*| of the convolution operator.
  double asymmetry = 0.0;
};

/// sigma-positive definiteness of phi via the spectrum of f -> phi * f.
/// A non-self-adjoint operator (asymmetry above tol.hermitian) is never positive.
PsdVerdict is_sigma_positive_definite(const Vector& phi, const Cocycle& c,
                                      const Tolerances& tol = kDefaultTolerances);

/// Dimension of the joint commutant of lambda_sigma and rho_conj(sigma),
/// i.e. of the center of the twisted group algebra.
std::size_t center_dimension(const Cocycle& c);

}  // namespace latdim
