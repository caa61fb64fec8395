#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ptol/element_set.hpp"

namespace ptol {

using ElementPair = std::pair<Element, Element>;

// A binary relation on a carrier 0..n-1, stored as n rows of bits:
// (a,b) is in the relation iff bit b of row a is set.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n);

  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t n);
  static BinaryRelation from_pairs(std::size_t n, std::span<ElementPair const> pairs);

  std::size_t size() const noexcept { return rows_.size(); }

  bool contains(Element a, Element b) const noexcept { return has_bit(rows_[a], b); }
  void insert(Element a, Element b);
  void erase(Element a, Element b);
  // Replaces row a; bits outside the carrier are rejected.
  void set_row(Element a, Mask successors);

  // Successor set {b : (a,b) in R}.
  Mask row(Element a) const noexcept { return rows_[a]; }
  std::span<Mask const> rows() const noexcept { return rows_; }

  std::size_t pair_count() const noexcept;
  // All pairs, lexicographic by (a,b).
  std::vector<ElementPair> pairs() const;

  friend bool operator==(BinaryRelation const&, BinaryRelation const&) = default;
  friend auto operator<=>(BinaryRelation const& lhs, BinaryRelation const& rhs) {
    return lhs.rows_ <=> rhs.rows_;
  }

 private:
  std::vector<Mask> rows_;
};

// Relational product with the left factor applied first:
//   (a,b) in compose(r1, r2)  iff  there is c with (a,c) in r1 and (c,b) in r2.
// Under this convention T∘S is compose(T, S). Swapping the arguments swaps
// T∘S and S∘T, so permutability checks depend on it.
BinaryRelation compose(BinaryRelation const& r1, BinaryRelation const& r2);

BinaryRelation inverse(BinaryRelation const& r);
BinaryRelation unite(BinaryRelation const& r1, BinaryRelation const& r2);
// Pairs of r1 not in r2.
BinaryRelation difference(BinaryRelation const& r1, BinaryRelation const& r2);

bool equals(BinaryRelation const& r1, BinaryRelation const& r2);
bool is_subset(BinaryRelation const& r1, BinaryRelation const& r2);
bool is_reflexive(BinaryRelation const& r);
bool is_symmetric(BinaryRelation const& r);

}  // namespace ptol
