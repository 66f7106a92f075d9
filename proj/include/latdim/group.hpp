#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latdim/config.hpp"

namespace latdim {

/// Group elements are dense indices 0..order-1.
using Element = std::uint32_t;

/**
 * A finite group given by its Cayley table.
 *
 * Instances are immutable and cheap to copy (the table is shared). Every
 * group carries a mixed-radix coordinate system used to parse element
 * tuples such as "(2,0)": cyclic factors contribute their order, any other
 * factor contributes one coordinate ranging over its element indices.
 */
class FiniteGroup {
 public:
  /// Validates the table. Throws Error with NotLatinSquare, NoIdentity or
  /// NotAssociative naming the first offending row/triple.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::string label);

  std::size_t order() const noexcept;
  Element identity() const noexcept;
  Element mul(Element x, Element y) const noexcept;
  Element inv(Element x) const noexcept;
  /// y^{-1} x y
  Element conjugate(Element x, Element y) const noexcept;
  bool commute(Element x, Element y) const noexcept;
  bool is_abelian() const noexcept;
  std::size_t element_order(Element x) const;

  const std::string& label() const noexcept;
  std::vector<std::vector<Element>> cayley() const;

  const std::vector<std::size_t>& radices() const noexcept;
  std::vector<std::size_t> coordinates(Element x) const;
  /// Throws InvalidInput when the tuple does not match the radices.
  Element from_coordinates(std::span<const std::size_t> coords) const;

  /// True when both handles share the same underlying table.
  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend FiniteGroup make_group_unchecked(std::vector<Element> flat, std::size_t order,
                                          std::string label, std::vector<std::size_t> radices);

  std::shared_ptr<const Data> data_;
};

/// Builds a group from a row-major table known to be valid (internal use by
/// the builders; identity and inverses are derived).
FiniteGroup make_group_unchecked(std::vector<Element> flat, std::size_t order, std::string label,
                                 std::vector<std::size_t> radices);

/// A subgroup together with its left transversal and a relabelled copy of
/// itself as a standalone group (local index i <-> elements()[i]).
class Subgroup {
 public:
  /// Throws InvalidInput unless `elements` is closed, contains the identity
  /// and lies inside `parent`.
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  const FiniteGroup& parent() const noexcept;
  /// Sorted ascending.
  const std::vector<Element>& elements() const noexcept;
  /// One representative per left coset tH (the minimal index of the coset).
  const std::vector<Element>& transversal() const noexcept;
  /// One representative per right coset Ht (the minimal index of the coset);
  /// {H t} is the fundamental-domain partition used by the module embedding.
  const std::vector<Element>& right_transversal() const noexcept;
  const FiniteGroup& as_group() const noexcept;

  std::size_t order() const noexcept { return elements().size(); }
  std::size_t index() const noexcept { return parent().order() / order(); }
  bool contains(Element x) const noexcept;
  std::optional<std::size_t> local_index(Element x) const noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

struct ConjugacyData {
  /// Classes ordered by their smallest element; each class sorted.
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  /// Centralizer of the first element of each class.
  std::vector<Subgroup> centralizers;
};

FiniteGroup build_cyclic(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Dihedral group of order 2n: index k is r^k, index n+k is s r^k.
FiniteGroup build_dihedral(std::size_t n);
/// Symmetric group on n <= 5 points, permutations in lexicographic order.
FiniteGroup build_symmetric(std::size_t n);
/// Quaternion group: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup build_quaternion();
/// Parses names such as "Z6", "S3", "D4", "Q8" and products "Z4xZ4".
FiniteGroup build_named(const std::string& name);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Every subgroup exactly once, ordered by (order, element list).
/// Throws BoundExceeded when g.order() > bound.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    std::size_t bound = kDefaultSubgroupBound);

ConjugacyData conjugacy(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Element x);

/// Representatives beta of the right cosets of the centralizer of gamma, so
/// that beta^{-1} gamma beta runs over the conjugacy class of gamma exactly once.
std::vector<Element> centralizer_transversal(const FiniteGroup& g, Element gamma);

}  // namespace latdim
