#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latdim/config.hpp"

namespace latdim::cli {

/// Every setting a subcommand may consume. Values come from the defaults
/// below, then a JSON --config file, then command-line flags.
struct RunConfig {
  std::string group = "Z2";
  std::string cocycle = "trivial";
  /// Base group A for the Weyl-Heisenberg cocycle; derived from the group
  /// name (first half of its factors) when empty.
  std::string base;
  /// Lattice grammar of io::parse_lattices; empty means the whole group.
  std::string lattice;
  /// Irreducible type index or path to a representation JSON file.
  std::string rep;
  /// "e0" (first basis vector), "random" (seeded) or a JSON vector file.
  std::string window = "e0";
  std::size_t n = 1;
  std::size_t d = 1;
  std::size_t n_max = 3;
  std::size_t d_max = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Tolerances tolerances{};
  std::string out;
  std::string in;
  /// parseval, orthonormal or auto (construct)
  std::string kind = "auto";
  bool json = false;
  bool oracle = false;
  bool construct = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
/// A consistency check failed (scan violation, audit violation).
inline constexpr int kExitCheckFailed = 3;

/// Parses args (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latdim::cli
