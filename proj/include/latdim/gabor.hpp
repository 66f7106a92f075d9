#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latdim/abelian.hpp"
#include "latdim/frame.hpp"

namespace latdim {

/// The time-frequency group A x dual(A) with the Weyl-Heisenberg cocycle and
/// the representation pi(x, w) xi(t) = w(t) xi(t - x) on l2(A).
struct TimeFrequencyGroup {
  FiniteGroup base;
  AbelianDecomposition decomposition;
  FiniteGroup group;
  Cocycle cocycle;
  ProjectiveRep rep;
};

inline constexpr std::size_t kMaxTimeFrequencyBase = 16;

/// Throws NotAbelian, or BoundExceeded when |a| > 16. Validates the cocycle,
/// the representation, irreducibility and Kleppner's condition.
TimeFrequencyGroup build_tf(const FiniteGroup& a);

/// Smallest-index generating set of a subgroup, written as coordinate tuples
/// of the parent group: "(2,0),(0,2)". The trivial subgroup gives "()".
std::string lattice_label(const Subgroup& h);

struct ScanRow {
  std::string base;
  std::string group;
  std::string cocycle;
  std::string lattice;
  std::size_t lattice_order = 0;
  std::size_t n = 1;
  std::size_t d = 1;
  /// |A| / |lattice|
  double dpi_vol = 0.0;
  bool frame = false;
  bool riesz = false;
  bool basis = false;
};

/// Outcome of constructing generators on one scan cell.
struct ConstructionCheck {
  std::size_t lattice_order = 0;
  std::string lattice;
  std::size_t n = 1;
  std::size_t d = 1;
  /// "parseval" or "orthonormal"
  std::string kind;
  double lower = 0.0;
  double upper = 0.0;
  /// max|Gram - I| (only meaningful when the cell is a basis or kind is orthonormal)
  double gram_residual = 0.0;
  bool ok = false;
};

struct ScanOptions {
  bool construct = true;
  /// Construct only when n |lattice| <= bound_factor * d |A|.
  std::size_t bound_factor = 2;
  std::uint64_t seed = 0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<ConstructionCheck> constructions;
  /// Cells where the decision differs from |A|/|lattice| vs n/d, where phi
  /// differs from (|A|/|lattice|) delta_e, or where basis != frame and riesz.
  std::vector<std::string> violations;
  /// Constructions whose bounds or Gram matrix missed the target.
  std::vector<std::string> construction_failures;
};

ScanResult gabor_scan(const TimeFrequencyGroup& tf, std::size_t n_max, std::size_t d_max,
                      const ScanOptions& options = {});

struct SuperframeReport {
  MultiwindowSystem system;
  FrameReport report;
  bool parseval = false;
};

/// A 1-window d-super Parseval frame for the lattice. Throws Infeasible when
/// |lattice| < d |A|.
SuperframeReport superframe_demo(const TimeFrequencyGroup& tf, const Subgroup& lattice, std::size_t d,
                                 std::uint64_t seed = 0);

/// Module spec for the Gabor representation with the first basis vector as
/// window; skips the irreducibility check done once by build_tf.
ModuleSpec gabor_spec(const TimeFrequencyGroup& tf, const Subgroup& lattice);

}  // namespace latdim
