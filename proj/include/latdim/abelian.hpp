#pragma once

#include <vector>

#include "latdim/group.hpp"
#include "latdim/types.hpp"

namespace latdim {

/// A finite abelian group written as a product of cyclic groups:
/// x = sum_i coords[x][i] * generators[i], with orders[0] >= orders[1] >= ...
/// each dividing the previous one.
struct AbelianDecomposition {
  FiniteGroup group;
  std::vector<Element> generators;
  std::vector<std::size_t> orders;
  std::vector<std::vector<std::size_t>> coords;
};

/// Greedy max-order splitting. Throws NotAbelian.
AbelianDecomposition cyclic_decomposition(const FiniteGroup& a);

/// The character with the same index as `chi`:
/// omega_chi(x) = exp(2 pi i sum_k c_k(chi) c_k(x) / n_k).
Complex character(const AbelianDecomposition& dec, Element chi, Element x);

}  // namespace latdim
