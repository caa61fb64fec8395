#include "ptol/amicability.hpp"

#include <algorithm>

namespace ptol {

namespace {

NeighborMap checked_map(Tolerance const& t, char const* name) {
  if (!is_2_uniform(t).holds()) {
    throw NotTwoUniform(std::string("tolerance ") + name + " is not 2-uniform");
  }
  return neighbor_map(t);
}

// Upper T- and S-neighbors of a (or lower ones), deduplicated and ascending.
std::vector<Element> neighbors_of(std::optional<Element> via_t, std::optional<Element> via_s) {
  std::vector<Element> out;
  if (via_t) {
    out.push_back(*via_t);
  }
  if (via_s && via_s != via_t) {
    out.push_back(*via_s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TolerancePair::TolerancePair(Tolerance t, Tolerance s)
    : t_(std::move(t)), s_(std::move(s)) {
  if (!(t_.poset() == s_.poset())) {
    throw Error("tolerances live on different posets");
  }
  t_map_ = checked_map(t_, "T");
  s_map_ = checked_map(s_, "S");
}

TolerancePair::TolerancePair(Tolerance t, Tolerance s, NeighborMap t_map, NeighborMap s_map)
    : t_(std::move(t)), s_(std::move(s)), t_map_(std::move(t_map)), s_map_(std::move(s_map)) {}

TolerancePair TolerancePair::swapped() const { return TolerancePair(s_, t_, s_map_, t_map_); }

std::vector<ElementClass> classify(TolerancePair const& pair) {
  NeighborMap const& tm = pair.t_neighbors();
  NeighborMap const& sm = pair.s_neighbors();
  std::size_t const n = pair.poset().size();
  std::vector<ElementClass> out(n);
  for (Element a = 0; a < n; ++a) {
    ElementClass& c = out[a];
    c.t_bottom = tm.upper[a].has_value();
    c.s_bottom = sm.upper[a].has_value();
    c.t_top = tm.lower[a].has_value();
    c.s_top = sm.lower[a].has_value();
    if (c.t_bottom && c.s_bottom) {
      c.adherent_bottom = tm.upper[a] == sm.upper[a];
      c.split_bottom = !c.adherent_bottom;
    }
    if (c.t_top && c.s_top) {
      c.adherent_top = tm.lower[a] == sm.lower[a];
      c.split_top = !c.adherent_top;
    }
  }
  return out;
}

Verdict check_condition_5(TolerancePair const& pair) {
  NeighborMap const& tm = pair.t_neighbors();
  NeighborMap const& sm = pair.s_neighbors();
  std::size_t const n = pair.poset().size();
  for (Element a = 0; a < n; ++a) {
    std::optional<Element> const c = tm.lower[a];
    if (!c) {
      continue;
    }
    for (Element b = 0; b < n; ++b) {
      if (b == a || sm.lower[b] != c) {
        continue;
      }
      if (!sm.upper[a] || sm.upper[a] != tm.upper[b]) {
        return Verdict::fail(Condition::c5, {a, b, *c});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_condition_6(TolerancePair const& pair) {
  NeighborMap const& tm = pair.t_neighbors();
  NeighborMap const& sm = pair.s_neighbors();
  std::size_t const n = pair.poset().size();
  for (Element a = 0; a < n; ++a) {
    std::optional<Element> const c = tm.upper[a];
    if (!c) {
      continue;
    }
    for (Element b = 0; b < n; ++b) {
      if (b == a || sm.upper[b] != c) {
        continue;
      }
      if (!sm.lower[a] || sm.lower[a] != tm.lower[b]) {
        return Verdict::fail(Condition::c6, {a, b, *c});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_condition_7(TolerancePair const& pair) {
  NeighborMap const& tm = pair.t_neighbors();
  NeighborMap const& sm = pair.s_neighbors();
  std::vector<ElementClass> const classes = classify(pair);
  for (Element a = 0; a < classes.size(); ++a) {
    if (!classes[a].top()) {
      continue;
    }
    for (Element b : neighbors_of(tm.upper[a], sm.upper[a])) {
      if (!classes[b].top()) {
        return Verdict::fail(Condition::c7, {a, b});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_condition_8(TolerancePair const& pair) {
  NeighborMap const& tm = pair.t_neighbors();
  NeighborMap const& sm = pair.s_neighbors();
  std::vector<ElementClass> const classes = classify(pair);
  for (Element a = 0; a < classes.size(); ++a) {
    if (!classes[a].bottom()) {
      continue;
    }
    for (Element b : neighbors_of(tm.lower[a], sm.lower[a])) {
      if (!classes[b].bottom()) {
        return Verdict::fail(Condition::c8, {a, b});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_amicable(TolerancePair const& pair) {
  for (auto check : {check_condition_5, check_condition_6, check_condition_7, check_condition_8}) {
    Verdict v = check(pair);
    if (!v.holds()) {
      return v;
    }
  }
  return Verdict::pass();
}

Verdict permute(TolerancePair const& pair) {
  BinaryRelation const ts = compose(pair.t().relation(), pair.s().relation());
  BinaryRelation const st = compose(pair.s().relation(), pair.t().relation());
  if (ts == st) {
    return Verdict::pass();
  }
  BinaryRelation const only_ts = difference(ts, st);
  if (only_ts.pair_count() == 0) {
    // T∘S is the inverse of S∘T for symmetric T and S, so this cannot be
    // reached for genuine tolerances.
    auto const p = difference(st, ts).pairs().front();
    return Verdict::fail(Condition::permutability, {p.first, p.second});
  }
  Poset const& poset = pair.poset();
  std::vector<ElementPair> const candidates = only_ts.pairs();
  auto it = std::find_if(candidates.begin(), candidates.end(), [&](ElementPair const& p) {
    return !poset.comparable(p.first, p.second);
  });
  ElementPair const w = it != candidates.end() ? *it : candidates.front();
  return Verdict::fail(Condition::permutability, {w.first, w.second});
}

}  // namespace ptol
