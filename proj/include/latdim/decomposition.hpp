#pragma once

#include <cstdint>
#include <vector>

#include "latdim/projective_rep.hpp"

namespace latdim {

/// One irreducible invariant subspace of a representation space.
struct IrreducibleBlock {
  /// Orthonormal columns spanning the block.
  Matrix basis;
  /// Index into Decomposition::types.
  std::size_t type = 0;
};

/// Splitting of a projective representation into irreducible subspaces.
///
/// A random element of the commutant is obtained by averaging a seeded
/// random Hermitian matrix over the group; its eigenspaces are irreducible
/// for a generic draw. Every block is certified by the character norm
/// sum_x |chi(x)|^2 = |G|, and equivalence classes are read off the
/// character inner products.
struct Decomposition {
  std::vector<IrreducibleBlock> blocks;
  /// Character of one representative block per type.
  std::vector<std::vector<Complex>> types;
  /// Dimension of each type.
  std::vector<std::size_t> type_dims;

  std::vector<std::size_t> multiplicities() const;
  std::vector<std::size_t> blocks_of_type(std::size_t t) const;
};

/// Throws Internal when no certified splitting is found after several reseeds.
Decomposition decompose(const ProjectiveRep& r, std::uint64_t seed = 0);

/// (1/|G|) sum_x chi_a(x) conj(chi_b(x))
Complex character_inner(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Unitary W with B(x) W = W A(x) for all x, where A and B are the
/// restrictions of ra and rb to two equivalent irreducible blocks.
/// Throws InvalidInput when the blocks are inequivalent.
Matrix block_intertwiner(const ProjectiveRep& ra, const Matrix& basis_a, const ProjectiveRep& rb,
                         const Matrix& basis_b);

/// One irreducible representation per equivalence class occurring in the
/// twisted left regular representation, ordered by dimension and then by
/// character values, so the order does not depend on the random seed.
std::vector<ProjectiveRep> irreducible_types(const Cocycle& c, std::uint64_t seed = 0);

/// The block restriction x -> B* pi(x) B.
ProjectiveRep compress(const ProjectiveRep& r, const Matrix& basis);

}  // namespace latdim
