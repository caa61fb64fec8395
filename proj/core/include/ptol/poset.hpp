#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptol/element_set.hpp"
#include "ptol/relation.hpp"

namespace ptol {

class PosetError : public Error {
 public:
  enum class Kind {
    duplicate_label,
    unknown_label,
    cycle,
    redundant_pair,
    not_an_order,
    too_large,
  };

  PosetError(Kind kind, std::string const& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

using LabelPair = std::pair<std::string, std::string>;

// A finite poset on the carrier 0..n-1 with a label per element.
//
// Immutable after construction. The order is stored as a bit matrix whose
// row x is the up-set of x; the cover relation, down-sets and the partial
// join/meet tables are derived once up front.
class Poset {
 public:
  // Builds the poset from its Hasse diagram. Every input pair must be a
  // cover of the resulting order: cycles, self-pairs, duplicates and
  // transitively implied pairs are rejected.
  static Poset from_covers(std::vector<std::string> labels, std::span<LabelPair const> covers);

  // Builds the poset from a full order matrix, which must be reflexive,
  // antisymmetric and transitive.
  static Poset from_order(std::vector<std::string> labels, BinaryRelation leq);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<std::string const> labels() const noexcept { return labels_; }
  std::string const& label(Element x) const { return labels_.at(x); }
  std::optional<Element> index_of(std::string_view label) const;

  bool leq(Element x, Element y) const noexcept { return leq_.contains(x, y); }
  bool less(Element x, Element y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }
  bool is_cover(Element x, Element y) const noexcept { return covers_.contains(x, y); }

  Mask up_set(Element x) const noexcept { return leq_.row(x); }
  Mask down_set(Element x) const noexcept { return geq_.row(x); }
  Mask upper_covers(Element x) const noexcept { return covers_.row(x); }
  Mask lower_covers(Element x) const noexcept { return covered_by_.row(x); }
  Mask carrier() const noexcept { return full_mask(size()); }

  BinaryRelation const& order() const noexcept { return leq_; }
  BinaryRelation const& cover_relation() const noexcept { return covers_; }
  // Cover pairs (x,y) with x ≺ y, lexicographic.
  std::vector<ElementPair> cover_pairs() const { return covers_.pairs(); }

  // Least upper bound of {x, y}, if it exists.
  std::optional<Element> join(Element x, Element y) const noexcept;
  // Greatest lower bound of {x, y}, if it exists.
  std::optional<Element> meet(Element x, Element y) const noexcept;

  bool is_lattice() const noexcept { return lattice_; }
  bool is_convex(ElementSet const& s) const;

  friend bool operator==(Poset const& lhs, Poset const& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.leq_ == rhs.leq_;
  }

 private:
  Poset(std::vector<std::string> labels, BinaryRelation leq);

  static constexpr int kAbsent = -1;

  std::vector<std::string> labels_;
  BinaryRelation leq_;         // row x = {y : x <= y}
  BinaryRelation geq_;         // row x = {y : y <= x}
  BinaryRelation covers_;      // row x = {y : x ≺ y}
  BinaryRelation covered_by_;  // row x = {y : y ≺ x}
  std::vector<int> join_;
  std::vector<int> meet_;
  bool lattice_ = false;
};

// Standard small orders used throughout tests and tools.
Poset make_chain(std::size_t n);
Poset make_antichain(std::size_t n);
// Subsets of an atoms-element set ordered by inclusion.
Poset make_boolean_lattice(std::size_t atoms);

}  // namespace ptol
