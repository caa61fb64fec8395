#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptol/element_set.hpp"

namespace ptol {

class Poset;

// Which requirement a relation or a pair of tolerances failed. The numbered
// conditions follow the usual numbering: (1)-(4) are the tolerance
// conditions on a poset, (5)-(8) the amicability conditions.
enum class Condition {
  reflexivity,
  symmetry,
  c1,
  c2,
  c3,
  c4,
  uniformity,
  c5,
  c6,
  c7,
  c8,
  permutability,
};

// "(1)" ... "(8)", or a word for the unnumbered requirements.
std::string condition_name(Condition c);

// Outcome of a decision procedure. A failing verdict names the violated
// condition and the elements realizing the violation, in the order the
// condition quantifies them.
class Verdict {
 public:
  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Condition violated, std::vector<Element> witness);

  bool holds() const noexcept { return !violated_.has_value(); }
  explicit operator bool() const noexcept { return holds(); }

  std::optional<Condition> violated() const noexcept { return violated_; }
  std::vector<Element> const& witness() const noexcept { return witness_; }

  friend bool operator==(Verdict const&, Verdict const&) = default;

 private:
  Verdict() = default;

  std::optional<Condition> violated_;
  std::vector<Element> witness_;
};

// Witness elements rendered by label, comma separated.
std::string witness_labels(Poset const& p, Verdict const& v);

// One-line human description, e.g. "condition (5): a,b via 0".
std::string describe(Poset const& p, Verdict const& v);

}  // namespace ptol
