#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latdim/cocycle.hpp"
#include "latdim/twisted_algebra.hpp"
#include "latdim/types.hpp"

namespace latdim {

/// A family of dim x dim matrices pi(x), one per group element, meant to
/// satisfy pi(x) pi(y) = sigma(x,y) pi(xy) with every pi(x) unitary.
class ProjectiveRep {
 public:
  /// Throws DimensionMismatch unless there is one square matrix per element,
  /// all of the same size.
  ProjectiveRep(Cocycle cocycle, std::vector<Matrix> matrices, std::string label = {});

  const FiniteGroup& group() const noexcept { return cocycle_.group(); }
  const Cocycle& cocycle() const noexcept { return cocycle_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& operator()(Element x) const { return matrices_[x]; }
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Cocycle cocycle_;
  std::vector<Matrix> matrices_;
  std::size_t dim_ = 0;
  std::string label_;
};

struct RepReport {
  bool valid = true;
  double max_unitary_residual = 0.0;
  double max_composition_residual = 0.0;
  /// Worst pair for the composition rule (or the element, twice, for unitarity).
  Element worst_x = 0, worst_y = 0;
  std::string message;
};

RepReport validate_rep(const ProjectiveRep& r, double tol = 1e-9);

struct IrreducibilityReport {
  bool irreducible = false;
  std::size_t commutant_dim = 0;
};

IrreducibilityReport is_irreducible(const ProjectiveRep& r);

/// | sum_x <xi, pi(x) eta> conj(<xi2, pi(x) eta2>) - (|G|/dim) <xi, xi2> conj(<eta, eta2>) |
double schur_residual(const ProjectiveRep& r, const Vector& xi, const Vector& xi2, const Vector& eta,
                      const Vector& eta2);

/// d_pi = dim / |G| under counting measure. Throws NotIrreducible, and
/// Internal if the orthogonality relations fail on seeded random vectors.
double formal_dimension(const ProjectiveRep& r, std::uint64_t seed = 0);

struct WaveletTransform {
  ProjectiveRep rep;
  Vector window;
  /// |G| x dim; row x is (pi(x) eta)^*.
  Matrix matrix;
  double intertwining_residual = 0.0;
  /// max|d_pi V* V - I|
  double isometry_residual = 0.0;
};

/// Throws WindowNotUnit when | ||eta|| - 1 | > 1e-9, NotIrreducible when the
/// scaled transform is not an isometry, Internal when it does not intertwine.
WaveletTransform wavelet(const ProjectiveRep& r, const Vector& eta);

/// Matrices of the lattice elements (in the subgroup's local order) with the
/// restricted cocycle.
ProjectiveRep restrict_to_lattice(const ProjectiveRep& r, const Subgroup& h);

/// max over x, y of max|pi(y)* pi(x) pi(y) - tilde(x,y) pi(y^{-1} x y)|
double projective_conjugation_residual(const ProjectiveRep& r);

ProjectiveRep regular_as_rep(const Cocycle& c, Side side = Side::Left);

/// The d-fold block-diagonal sum pi + ... + pi.
ProjectiveRep direct_sum(const ProjectiveRep& r, std::size_t copies);

/// Character x -> trace(pi(x)).
std::vector<Complex> character_of(const ProjectiveRep& r);

}  // namespace latdim
