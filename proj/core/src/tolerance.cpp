#include "ptol/tolerance.hpp"

#include <algorithm>
#include <bit>

namespace ptol {

namespace {

// (1) and (2) differ only in which bound table is consulted.
template <typename Bound>
std::optional<Verdict> check_bound_compatibility(BinaryRelation const& r, Condition tag,
                                                 Bound bound) {
  std::size_t const n = r.size();
  // Loop nesting x, y, z, u keeps the first hit lexicographically least.
  for (Element x = 0; x < n; ++x) {
    std::optional<Verdict> found;
    for_each_bit(r.row(x), [&](Element y) {
      if (found) {
        return;
      }
      for (Element z = 0; z < n && !found; ++z) {
        std::optional<Element> const xz = bound(x, z);
        if (!xz) {
          continue;
        }
        for_each_bit(r.row(z), [&](Element u) {
          if (found) {
            return;
          }
          std::optional<Element> const yu = bound(y, u);
          if (yu && !r.contains(*xz, *yu)) {
            found = Verdict::fail(tag, {x, y, z, u});
          }
        });
      }
    });
    if (found) {
      return found;
    }
  }
  return std::nullopt;
}

std::optional<Verdict> check_interpolation(Poset const& p, BinaryRelation const& r) {
  std::size_t const n = r.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!r.contains(x, y)) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        if (!r.contains(y, z)) {
          continue;
        }
        Mask const lower = p.down_set(x) & p.down_set(y) & p.down_set(z);
        Mask const upper = p.up_set(x) & p.up_set(y) & p.up_set(z);
        // (u,y) in r and (y,v) in r; r is symmetric by now.
        if ((lower & r.row(y)) == 0 || (upper & r.row(y)) == 0) {
          return Verdict::fail(Condition::c3, {x, y, z});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Verdict> check_enclosing_pair(Poset const& p, BinaryRelation const& r) {
  std::size_t const n = r.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!r.contains(x, y)) {
        continue;
      }
      Mask const common = r.row(x) & r.row(y);  // all v with (v,x),(v,y) in r
      Mask candidates_z = 0;
      Mask candidates_u = 0;
      for_each_bit(p.down_set(x) & p.down_set(y), [&](Element z) {
        if ((common & ~r.row(z)) == 0) {
          candidates_z |= bit(z);
        }
      });
      for_each_bit(p.up_set(x) & p.up_set(y), [&](Element u) {
        if ((common & ~r.row(u)) == 0) {
          candidates_u |= bit(u);
        }
      });
      bool found = false;
      for_each_bit(candidates_z, [&](Element z) {
        if ((r.row(z) & candidates_u) != 0) {
          found = true;
        }
      });
      if (!found) {
        return Verdict::fail(Condition::c4, {x, y});
      }
    }
  }
  return std::nullopt;
}

void bron_kerbosch(std::vector<Mask> const& adj, Mask clique, Mask candidates, Mask excluded,
                   std::vector<Mask>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(clique);
    return;
  }
  Element pivot = 0;
  int best = -1;
  for_each_bit(candidates | excluded, [&](Element u) {
    int const degree = std::popcount(candidates & adj[u]);
    if (degree > best) {
      best = degree;
      pivot = u;
    }
  });
  for_each_bit(candidates & ~adj[pivot], [&](Element v) {
    bron_kerbosch(adj, clique | bit(v), candidates & adj[v], excluded & adj[v], out);
    candidates &= ~bit(v);
    excluded |= bit(v);
  });
}

}  // namespace

Verdict check_tolerance(Poset const& p, BinaryRelation const& r) {
  std::size_t const n = p.size();
  if (r.size() != n) {
    throw CarrierMismatch(n, r.size());
  }
  for (Element x = 0; x < n; ++x) {
    if (!r.contains(x, x)) {
      return Verdict::fail(Condition::reflexivity, {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (r.contains(x, y) && !r.contains(y, x)) {
        return Verdict::fail(Condition::symmetry, {x, y});
      }
    }
  }
  if (auto v = check_bound_compatibility(r, Condition::c1,
                                         [&](Element a, Element b) { return p.join(a, b); })) {
    return *v;
  }
  if (auto v = check_bound_compatibility(r, Condition::c2,
                                         [&](Element a, Element b) { return p.meet(a, b); })) {
    return *v;
  }
  if (r == BinaryRelation::full(n)) {
    return Verdict::pass();
  }
  if (auto v = check_interpolation(p, r)) {
    return *v;
  }
  if (auto v = check_enclosing_pair(p, r)) {
    return *v;
  }
  return Verdict::pass();
}

std::vector<ElementSet> maximal_cliques(BinaryRelation const& r) {
  std::size_t const n = r.size();
  std::vector<Mask> adj(n);
  for (Element x = 0; x < n; ++x) {
    adj[x] = r.row(x) & ~bit(x);
  }
  std::vector<Mask> found;
  bron_kerbosch(adj, 0, full_mask(n), 0, found);
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (Mask m : found) {
    if (m != 0) {
      out.emplace_back(n, m);
    }
  }
  std::sort(out.begin(), out.end(), [](ElementSet const& a, ElementSet const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.members() < b.members();
  });
  return out;
}

InvalidTolerance::InvalidTolerance(Poset const& p, Verdict verdict)
    : Error("not a tolerance: " + describe(p, verdict)), verdict_(std::move(verdict)) {}

Tolerance::Tolerance(PosetPtr poset, BinaryRelation r) : poset_(std::move(poset)), rel_(std::move(r)) {
  Verdict v = check_tolerance(*poset_, rel_);
  if (!v.holds()) {
    throw InvalidTolerance(*poset_, std::move(v));
  }
}

std::optional<Tolerance> Tolerance::try_make(PosetPtr poset, BinaryRelation r, Verdict* why) {
  Verdict v = check_tolerance(*poset, r);
  if (!v.holds()) {
    if (why != nullptr) {
      *why = std::move(v);
    }
    return std::nullopt;
  }
  if (why != nullptr) {
    *why = Verdict::pass();
  }
  return Tolerance(Checked{}, std::move(poset), std::move(r));
}

std::vector<ElementSet> blocks(Tolerance const& t) { return maximal_cliques(t.relation()); }

Verdict is_2_uniform(Tolerance const& t) {
  for (ElementSet const& b : blocks(t)) {
    if (b.size() != 2) {
      return Verdict::fail(Condition::uniformity, b.members());
    }
  }
  return Verdict::pass();
}

NeighborMap neighbor_map(Tolerance const& t) {
  if (!is_2_uniform(t).holds()) {
    throw NotTwoUniform("neighbor maps are defined only for 2-uniform tolerances");
  }
  Poset const& p = t.poset();
  std::size_t const n = p.size();
  NeighborMap map{std::vector<std::optional<Element>>(n), std::vector<std::optional<Element>>(n)};
  for (Element a = 0; a < n; ++a) {
    for_each_bit(p.upper_covers(a) & t.relation().row(a), [&](Element b) {
      if (map.upper[a] || map.lower[b]) {
        throw NeighborUniquenessViolation("element '" + p.label(map.upper[a] ? a : b)
                                          + "' has two T-neighbors on one side");
      }
      map.upper[a] = b;
      map.lower[b] = a;
    });
  }
  return map;
}

}  // namespace ptol
