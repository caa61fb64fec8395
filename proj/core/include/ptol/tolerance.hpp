#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ptol/element_set.hpp"
#include "ptol/poset.hpp"
#include "ptol/relation.hpp"
#include "ptol/verdict.hpp"

namespace ptol {

using PosetPtr = std::shared_ptr<Poset const>;

// Decides whether r is a tolerance on p: reflexive, symmetric, and
// compatible with the poset in the sense of conditions (1)-(4):
//
//  (1) (x,y),(z,u) in r, x∨z and y∨u exist  =>  (x∨z, y∨u) in r
//  (2) dual of (1) with meets
//  (3) r != P², (x,y),(y,z) in r  =>  some u <= x,y,z with (u,y) in r and
//      some v >= x,y,z with (y,v) in r
//  (4) r != P², (x,y) in r  =>  some (z,u) in r with z <= x,y <= u such that
//      every v with (v,x),(v,y) in r also has (v,z),(v,u) in r
//
// Conditions are checked in that order after reflexivity and symmetry; the
// reported witness is the lexicographically least violating tuple of the
// first failing condition ((x,y,z,u) for (1)/(2), (x,y,z) for (3), (x,y)
// for (4)).
Verdict check_tolerance(Poset const& p, BinaryRelation const& r);

// Maximal cliques of a symmetric relation viewed as an undirected graph
// (loops ignored), sorted by size, then by member list.
std::vector<ElementSet> maximal_cliques(BinaryRelation const& r);

class InvalidTolerance : public Error {
 public:
  InvalidTolerance(Poset const& p, Verdict verdict);
  Verdict const& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

// A relation validated by check_tolerance, together with the poset it lives on.
class Tolerance {
 public:
  // Throws InvalidTolerance when r fails check_tolerance.
  Tolerance(PosetPtr poset, BinaryRelation r);

  // Returns the tolerance, or nothing with the failing verdict in *why.
  static std::optional<Tolerance> try_make(PosetPtr poset, BinaryRelation r,
                                           Verdict* why = nullptr);

  Poset const& poset() const noexcept { return *poset_; }
  PosetPtr const& poset_ptr() const noexcept { return poset_; }
  BinaryRelation const& relation() const noexcept { return rel_; }

  friend bool operator==(Tolerance const& lhs, Tolerance const& rhs) {
    return *lhs.poset_ == *rhs.poset_ && lhs.rel_ == rhs.rel_;
  }

 private:
  struct Checked {};
  Tolerance(Checked, PosetPtr poset, BinaryRelation r)
      : poset_(std::move(poset)), rel_(std::move(r)) {}

  PosetPtr poset_;
  BinaryRelation rel_;
};

// Blocks (maximal B with B² ⊆ T), sorted by size then least member.
std::vector<ElementSet> blocks(Tolerance const& t);

// Holds iff every block has exactly two elements; otherwise the witness is
// the first offending block.
Verdict is_2_uniform(Tolerance const& t);

class NotTwoUniform : public Error {
 public:
  using Error::Error;
};

// Raised when an element has two lower (or two upper) neighbors in a
// 2-uniform tolerance. That cannot happen for a correct tolerance check.
class NeighborUniquenessViolation : public Error {
 public:
  using Error::Error;
};

// Unique lower/upper T-neighbors of a 2-uniform tolerance: lower[b] = a
// iff a ≺ b and (a,b) in T, dually for upper.
struct NeighborMap {
  std::vector<std::optional<Element>> lower;
  std::vector<std::optional<Element>> upper;

  friend bool operator==(NeighborMap const&, NeighborMap const&) = default;
};

// Throws NotTwoUniform or NeighborUniquenessViolation.
NeighborMap neighbor_map(Tolerance const& t);

}  // namespace ptol
