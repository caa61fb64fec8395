#include "ptol/verdict.hpp"

#include "ptol/poset.hpp"

namespace ptol {

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::reflexivity:
      return "reflexivity";
    case Condition::symmetry:
      return "symmetry";
    case Condition::c1:
      return "(1)";
    case Condition::c2:
      return "(2)";
    case Condition::c3:
      return "(3)";
    case Condition::c4:
      return "(4)";
    case Condition::uniformity:
      return "2-uniformity";
    case Condition::c5:
      return "(5)";
    case Condition::c6:
      return "(6)";
    case Condition::c7:
      return "(7)";
    case Condition::c8:
      return "(8)";
    case Condition::permutability:
      return "permutability";
  }
  return "unknown";
}

Verdict Verdict::fail(Condition violated, std::vector<Element> witness) {
  Verdict v;
  v.violated_ = violated;
  v.witness_ = std::move(witness);
  return v;
}

std::string witness_labels(Poset const& p, Verdict const& v) {
  std::string out;
  for (Element x : v.witness()) {
    if (!out.empty()) {
      out += ',';
    }
    out += p.label(x);
  }
  return out;
}

std::string describe(Poset const& p, Verdict const& v) {
  if (v.holds()) {
    return "holds";
  }
  Condition const c = *v.violated();
  auto const& w = v.witness();
  auto name = [&](std::size_t i) { return p.label(w.at(i)); };
  switch (c) {
    case Condition::c1:
    case Condition::c2:
      // (x,y),(z,u)
      return "condition " + condition_name(c) + ": (" + name(0) + "," + name(1) + "),(" + name(2)
             + "," + name(3) + ")";
    case Condition::c5:
    case Condition::c6:
      return "condition " + condition_name(c) + ": " + name(0) + "," + name(1) + " via "
             + name(2);
    case Condition::uniformity:
      return "2-uniformity: block {" + witness_labels(p, v) + "}";
    case Condition::permutability:
      return "permutability: (" + name(0) + "," + name(1) + ")";
    case Condition::reflexivity:
    case Condition::symmetry:
      return condition_name(c) + ": " + witness_labels(p, v);
    default:
      return "condition " + condition_name(c) + ": " + witness_labels(p, v);
  }
}

}  // namespace ptol
