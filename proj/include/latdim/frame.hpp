#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latdim/decomposition.hpp"
#include "latdim/twisted_algebra.hpp"
#include "latdim/vn_dimension.hpp"

namespace latdim {

/// An n-multiwindow d-super system: the vectors pi^d(gamma) g_i in H_pi^d
/// for gamma in the lattice and i < n.
struct MultiwindowSystem {
  ProjectiveRep rep;
  Subgroup lattice;
  std::size_t n = 1;
  std::size_t d = 1;
  /// (d * dim) x n; column i stacks the windows eta_{i,1}, ..., eta_{i,d}.
  Matrix generators;

  Vector window(std::size_t i, std::size_t j) const;
};

/// Throws DimensionMismatch when the generator matrix has the wrong shape.
MultiwindowSystem make_system(ProjectiveRep rep, Subgroup lattice, std::size_t n, std::size_t d,
                              Matrix generators);

/// Analysis matrix: row i*|lattice| + gamma is (pi^d(gamma) g_i)^*.
Matrix analysis_matrix(const MultiwindowSystem& sys);

struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
  bool is_frame = false;
  double riesz_lower = 0.0;
  double riesz_upper = 0.0;
  bool is_riesz_sequence = false;
  bool is_riesz_basis = false;
};

FrameReport frame_report(const MultiwindowSystem& sys, const Tolerances& tol = kDefaultTolerances);

struct ExistenceDecision {
  PhiFunction phi;
  bool frame = false;
  bool riesz = false;
  bool basis = false;
  /// sigma-PSD verdicts for (n/d) delta_e - phi and phi - (n/d) delta_e.
  PsdVerdict frame_witness;
  PsdVerdict riesz_witness;
  /// max |phi - (n/d) delta_e|
  double basis_residual = 0.0;
};

ExistenceDecision existence_decision(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                     const Tolerances& tol = kDefaultTolerances);
ExistenceDecision existence_decision(const PhiFunction& phi, const Cocycle& restricted, std::size_t n,
                                     std::size_t d, const Tolerances& tol = kDefaultTolerances);

/// phi == (n/d) delta_e within 1e-9.
bool riesz_basis_criterion(const ModuleSpec& spec, std::size_t n, std::size_t d);
bool riesz_basis_criterion(const PhiFunction& phi, std::size_t n, std::size_t d);

/// Lattice-equivariant isometries between H_pi^d and l2(lattice)^n, built by
/// matching irreducible blocks of both sides. Decompositions are computed
/// once and reused for every (n, d).
class BlockMatcher {
 public:
  /// rep is the representation of G; only the lattice part is used.
  BlockMatcher(const ProjectiveRep& rep, const Subgroup& lattice, std::uint64_t seed = 0);

  /// Copies of each irreducible type in H_pi and in l2(lattice), indexed by
  /// the types of the regular side.
  const std::vector<std::size_t>& module_multiplicities() const noexcept { return mult_h_; }
  const std::vector<std::size_t>& regular_multiplicities() const noexcept { return mult_r_; }

  bool embeds_module(std::size_t n, std::size_t d) const;
  bool embeds_regular(std::size_t n, std::size_t d) const;

  /// Isometry T : H^d -> l2(lattice)^n with T pi^d(gamma) = lambda^n(gamma) T.
  /// Throws Infeasible when the multiplicities do not allow it.
  Matrix module_into_regular(std::size_t n, std::size_t d) const;
  /// Isometry D : l2(lattice)^n -> H^d with D lambda^n(gamma) = pi^d(gamma) D.
  Matrix regular_into_module(std::size_t n, std::size_t d) const;

 private:
  // Partial isometry matching copies of each type on the H^d side with
  // copies on the l2^n side, as a (n|L|) x (d dim) matrix.
  Matrix assemble(std::size_t n, std::size_t d) const;

  ProjectiveRep local_;
  ProjectiveRep regular_;
  Decomposition dec_h_;
  Decomposition dec_r_;
  std::vector<std::size_t> type_of_h_;  // H-side type -> regular-side type
  std::vector<std::size_t> mult_h_;
  std::vector<std::size_t> mult_r_;
  // For every H block, the unitary onto the first regular block of its type,
  // and for every regular block, the unitary from the first block of its type.
  std::vector<Matrix> h_to_ref_;
  std::vector<Matrix> ref_to_r_;
};

/// Parseval generators g_i = T^*(delta_e (x) e_i). Throws Infeasible when
/// the frame decision is negative.
MultiwindowSystem construct_parseval_generators(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                                std::uint64_t seed = 0);
MultiwindowSystem construct_parseval_generators(const ModuleSpec& spec, const BlockMatcher& matcher,
                                                std::size_t n, std::size_t d);

/// Orthonormal generators g_i = D(delta_e (x) e_i). Throws Infeasible when
/// the Riesz decision is negative.
MultiwindowSystem construct_orthonormal_generators(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                                   std::uint64_t seed = 0);
MultiwindowSystem construct_orthonormal_generators(const ModuleSpec& spec, const BlockMatcher& matcher,
                                                   std::size_t n, std::size_t d);

struct DensityVerdict {
  bool ok = true;
  std::string violation;
};

/// is_frame => dim*d <= n*|lattice| and is_riesz_sequence => dim*d >= n*|lattice|.
DensityVerdict density_check(const FrameReport& report, std::size_t dim, std::size_t lattice_order,
                             std::size_t n, std::size_t d);
DensityVerdict density_check(const FrameReport& report, const ModuleSpec& spec, std::size_t n, std::size_t d);

struct Tightening {
  MultiwindowSystem system;
  /// max over lattice elements of max|S^{-1/2} pi^d(gamma) - pi^d(gamma) S^{-1/2}|
  double commutation_residual = 0.0;
};

/// Applies S^{-1/2} to every generator. Throws PreconditionFailed unless the
/// system is a frame.
Tightening canonical_tightening(const MultiwindowSystem& sys, const Tolerances& tol = kDefaultTolerances);

/// Generators with independent standard complex normal entries.
MultiwindowSystem random_system(const ProjectiveRep& rep, const Subgroup& lattice, std::size_t n, std::size_t d,
                                std::mt19937_64& rng);

}  // namespace latdim
