#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "latdim/abelian.hpp"
#include "latdim/config.hpp"
#include "latdim/group.hpp"
#include "latdim/types.hpp"

namespace latdim {

/// A complex table on G x G, intended to be a normalized 2-cocycle.
/// Construction only checks the shape; use validate() for the algebra.
class Cocycle {
 public:
  /// Throws DimensionMismatch unless table.size() == order^2 (row-major).
  Cocycle(FiniteGroup group, std::vector<Complex> table, std::string label);

  const FiniteGroup& group() const noexcept { return group_; }
  Complex operator()(Element x, Element y) const noexcept {
    return (*table_)[static_cast<std::size_t>(x) * group_.order() + y];
  }
  const std::vector<Complex>& table() const noexcept { return *table_; }
  const std::string& label() const noexcept { return label_; }

 private:
  FiniteGroup group_;
  std::shared_ptr<const std::vector<Complex>> table_;
  std::string label_;
};

struct CocycleReport {
  enum class Violation { None, NotUnitModulus, NotNormalized, CocycleIdentity };

  bool valid = true;
  Violation violation = Violation::None;
  /// First violating tuple; unused trailing slots are zero.
  std::array<Element, 3> tuple{};
  /// Residual at the first violation (0 when valid).
  double residual = 0.0;
  double max_unit_residual = 0.0;
  double max_identity_residual = 0.0;
  std::string message;
};

CocycleReport validate(const Cocycle& c, const Tolerances& tol = kDefaultTolerances);

Cocycle trivial_cocycle(const FiniteGroup& g);
/// Entrywise complex conjugate (exact).
Cocycle conjugate_cocycle(const Cocycle& c);

/// sigma(x,y) * conj(sigma(y, y^{-1} x y))
Complex tilde(const Cocycle& c, Element x, Element y);

struct TildeReport {
  /// Max residuals of: tilde(x,yz) = tilde(x,y) tilde(y^-1xy,z);
  /// tilde(x,y^-1) = conj(tilde(yxy^-1,y)); tilde(x,y) = tilde(x,y') for
  /// regular x with y^-1xy = y'^-1xy'.
  std::array<double, 3> max_residual{};
  bool ok = true;
  /// Name of the first identity exceeding the tolerance, empty if ok.
  std::string violated;
  std::array<Element, 3> tuple{};
};

TildeReport verify_tilde_identities(const Cocycle& c, double tol = 1e-12,
                                    const Tolerances& tols = kDefaultTolerances);

struct RegularityReport {
  std::vector<bool> regular_elements;
  std::vector<bool> regular_classes;
  ConjugacyData conjugacy;
  /// Only the identity class is regular (every class of a finite group is finite).
  bool kleppner = false;
};

RegularityReport regularity(const Cocycle& c, const Tolerances& tol = kDefaultTolerances);

/// sigma((x,w),(x',w')) = conj(w'(x)) on a x dual(a); the product group is
/// direct_product(a, a) with the dual indexed like a. Throws NotAbelian.
Cocycle weyl_heisenberg(const FiniteGroup& a);
Cocycle weyl_heisenberg(const AbelianDecomposition& dec);

/// Restriction to h x h, reindexed by h's local element order (h.as_group()).
Cocycle restrict(const Cocycle& c, const Subgroup& h);

}  // namespace latdim
