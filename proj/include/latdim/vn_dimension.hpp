#pragma once

#include <vector>

#include "latdim/projective_rep.hpp"

namespace latdim {

/// H_pi as a module over the twisted group algebra of a lattice.
struct ModuleSpec {
  ProjectiveRep rep;
  Subgroup lattice;
  /// rep.cocycle() restricted to the lattice, in the lattice's local indexing.
  Cocycle restricted;
  Vector window;
};

/// Throws InvalidInput when the lattice is not a subgroup of rep.group(),
/// WindowNotUnit for a non-unit window and NotIrreducible for a reducible rep.
ModuleSpec make_module_spec(ProjectiveRep rep, Subgroup lattice, Vector window);
/// Same, with the first standard basis vector as window.
ModuleSpec make_module_spec(ProjectiveRep rep, Subgroup lattice);

/// Fourier coefficient of the center-valued dimension of H_pi, indexed by
/// the lattice's local element order.
struct PhiFunction {
  Vector values;
  /// dim(pi) / |lattice|, the scalar dimension d_pi vol(G/lattice).
  double dpi_vol = 0.0;
  /// Regularity of each lattice element for the restricted cocycle.
  std::vector<bool> class_regular;
  /// Local index of the lattice identity.
  Element identity = 0;
};

/// Closed form: for regular gamma,
///   phi(gamma) = d_pi/|C_gamma| sum_y conj(sigma(gamma,y)) sigma(y, y^-1 gamma y) <eta, pi(y^-1 gamma y) eta>
/// with y over a right transversal of the lattice centralizer of gamma in G;
/// zero on non-regular classes.
PhiFunction phi(const ModuleSpec& spec, const Tolerances& tol = kDefaultTolerances);

/// Brute force through the module embedding: project l2(G) onto the range
/// of the wavelet transform, pull back to l2(lattice) (x) l2(B), sum the
/// center-valued traces of the diagonal blocks and read off the Fourier
/// coefficient.
PhiFunction phi_oracle(const ModuleSpec& spec);

/// The oracle for the submodule of l2(G)^copies spanned by the columns of
/// `embedding` (rows indexed copy * |G| + x). The span must be invariant
/// under the lattice acting by lambda_sigma on each copy.
Vector phi_from_embedding(const Cocycle& sigma, const Subgroup& lattice, const Matrix& embedding,
                          std::size_t copies);

/// Oracle value for H_pi^copies, embedded block-diagonally.
Vector phi_oracle_direct_sum(const ModuleSpec& spec, std::size_t copies);

/// Matrix of f -> phi * f on l2(lattice). Throws NotHermitian.
Matrix cdim_operator(const PhiFunction& phi, const Cocycle& restricted);

/// (dim/|lattice|) delta_e, valid when G is abelian and satisfies Kleppner's
/// condition. Throws PreconditionFailed otherwise.
PhiFunction abelian_kleppner_shortcut(const ModuleSpec& spec, const Tolerances& tol = kDefaultTolerances);

}  // namespace latdim
