#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latdim/gabor.hpp"

namespace latdim::testing {

/// Z1..Z8, Z2xZ2, Z2xZ4, S3, D4, Q8.
std::vector<FiniteGroup> fixture_groups();

/// A cocycle together with the irreducible representations used with it.
struct CocycleFixture {
  std::string name;
  Cocycle cocycle;
  std::vector<ProjectiveRep> reps;
  std::optional<TimeFrequencyGroup> tf;
};

/// Phases c(x) = exp(2 pi i k_x / 7) with k_e = 0, so the coboundary
/// c(x) c(y) / c(xy) is a normalized cocycle that is not identically 1.
std::vector<Complex> coboundary_phases(const FiniteGroup& g);
Cocycle coboundary(const FiniteGroup& g);
/// x -> c(x) pi(x), a representation for coboundary(g) when pi is ordinary.
ProjectiveRep twist_by_phases(const ProjectiveRep& r, const Cocycle& twisted);

/// Trivial cocycles on every fixture group with all irreducible types,
/// Weyl-Heisenberg on A x dual(A) for A in {Z2, Z3, Z4, Z2xZ2}, and
/// coboundary twists of the nonabelian fixtures.
std::vector<CocycleFixture> cocycle_fixtures();

/// Bases of time-frequency groups used by the scans.
std::vector<std::string> scan_bases();

}  // namespace latdim::testing
