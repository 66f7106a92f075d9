#pragma once

#include <cstddef>

namespace latdim {

/// Numerical tolerances shared by every module. The PSD and frame
/// tolerances are relative: they are scaled by the operator norm at the
/// point of use.
struct Tolerances {
  double unit = 1e-9;        // |sigma(x,y)| = 1
  double identity = 1e-9;    // cocycle identity and sigma-regularity
  double psd = 1e-9;         // min eigenvalue >= -psd * max(1, ||M||)
  double frame = 1e-8;       // lower bound > frame * upper bound
  double hermitian = 1e-8;   // ||M - M*|| above this is an error
};

inline constexpr Tolerances kDefaultTolerances{};

/// Largest group accepted by subgroup enumeration.
inline constexpr std::size_t kDefaultSubgroupBound = 256;

}  // namespace latdim
