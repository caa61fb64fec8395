#pragma once

#include <vector>

#include "ptol/tolerance.hpp"

namespace ptol {

// Two 2-uniform tolerances on the same poset, with their neighbor maps.
class TolerancePair {
 public:
  // Throws NotTwoUniform if either tolerance is not 2-uniform, Error if the
  // two live on different posets.
  TolerancePair(Tolerance t, Tolerance s);

  Tolerance const& t() const noexcept { return t_; }
  Tolerance const& s() const noexcept { return s_; }
  Poset const& poset() const noexcept { return t_.poset(); }
  NeighborMap const& t_neighbors() const noexcept { return t_map_; }
  NeighborMap const& s_neighbors() const noexcept { return s_map_; }

  // The same pair with the roles of T and S exchanged.
  TolerancePair swapped() const;

 private:
  TolerancePair(Tolerance t, Tolerance s, NeighborMap t_map, NeighborMap s_map);

  Tolerance t_;
  Tolerance s_;
  NeighborMap t_map_;
  NeighborMap s_map_;
};

// Bottom/top flags of one element with respect to (T,S).
//
// A split (T,S)-bottom has an upper T-neighbor and a different upper
// S-neighbor; an adherent one has a common upper T- and S-neighbor. Tops are
// dual. A T-top is an upper T-neighbor of something (it has a lower
// T-neighbor), a T-bottom a lower one.
struct ElementClass {
  bool split_bottom = false;
  bool adherent_bottom = false;
  bool split_top = false;
  bool adherent_top = false;
  bool t_top = false;
  bool t_bottom = false;
  bool s_top = false;
  bool s_bottom = false;

  bool bottom() const noexcept { return split_bottom || adherent_bottom; }
  bool top() const noexcept { return split_top || adherent_top; }

  friend bool operator==(ElementClass const&, ElementClass const&) = default;
};

std::vector<ElementClass> classify(TolerancePair const& pair);

// (5) a != b and lower_T(a) = lower_S(b) exists  =>  upper_S(a) = upper_T(b) exists.
//     Witness (a, b, common lower neighbor).
Verdict check_condition_5(TolerancePair const& pair);
// (6) a != b and upper_T(a) = upper_S(b) exists  =>  lower_S(a) = lower_T(b) exists.
//     Witness (a, b, common upper neighbor).
Verdict check_condition_6(TolerancePair const& pair);
// (7) a a (T,S)-top, b an upper T- or S-neighbor of a  =>  b a (T,S)-top.
//     Witness (a, b).
Verdict check_condition_7(TolerancePair const& pair);
// (8) a a (T,S)-bottom, b a lower T- or S-neighbor of a  =>  b a (T,S)-bottom.
//     Witness (a, b).
Verdict check_condition_8(TolerancePair const& pair);

// Conjunction of (5)-(8), reporting the first failing condition.
Verdict is_amicable(TolerancePair const& pair);

// Holds iff T∘S = S∘T, computed from the relations alone.
//
// On failure the witness (a,b) lies in (T∘S) \ (S∘T). Incomparable pairs are
// preferred, then lexicographic order: a pair of incomparable elements is
// the one-step obstruction through a shared lower or upper neighbor.
Verdict permute(TolerancePair const& pair);

}  // namespace ptol
