#pragma once

// Test helpers: fixture loading and a literal, deliberately slow evaluation
// of the tolerance conditions on vector<vector<bool>> matrices. The oracle
// reads nothing from the library except the order relation itself.

#include <cstddef>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptol/ptol.hpp"

namespace ptol::test {

inline std::string fixture_path(std::string const& name) {
  return std::string(PTOL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline PosetPtr load_fixture_poset(std::string const& name) {
  return std::make_shared<Poset const>(parse_poset(read_text(fixture_path(name + ".poset"))));
}

inline BinaryRelation load_fixture_relation(PosetPtr const& p, std::string const& name) {
  return parse_tolerance(read_text(fixture_path(name + ".tol")), *p);
}

// Poset plus the T and S of one worked example ("fig1", "fig2", "fig3").
struct Example {
  PosetPtr poset;
  Tolerance t;
  Tolerance s;

  TolerancePair pair() const { return TolerancePair(t, s); }
  Element at(std::string const& label) const { return *poset->index_of(label); }
};

inline Example load_example(std::string const& fig) {
  PosetPtr p = load_fixture_poset(fig);
  Tolerance t(p, load_fixture_relation(p, fig + "_T"));
  Tolerance s(p, load_fixture_relation(p, fig + "_S"));
  return Example{p, std::move(t), std::move(s)};
}

// Relation from label pairs, symmetric closure and diagonal added.
inline BinaryRelation symmetric_relation(Poset const& p,
                                         std::vector<std::pair<std::string, std::string>> const& ps) {
  BinaryRelation r = BinaryRelation::identity(p.size());
  for (auto const& [a, b] : ps) {
    r.insert(*p.index_of(a), *p.index_of(b));
    r.insert(*p.index_of(b), *p.index_of(a));
  }
  return r;
}

inline BinaryRelation relation_from_label_pairs(
    Poset const& p, std::vector<std::pair<std::string, std::string>> const& ps) {
  BinaryRelation r(p.size());
  for (auto const& [a, b] : ps) {
    r.insert(*p.index_of(a), *p.index_of(b));
  }
  return r;
}

inline ElementSet label_set(Poset const& p, std::vector<std::string> const& labels) {
  ElementSet s(p.size());
  for (auto const& l : labels) {
    s.insert(*p.index_of(l));
  }
  return s;
}

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix order_matrix(Poset const& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      m[i][j] = p.leq(i, j);
    }
  }
  return m;
}

inline Matrix to_matrix(BinaryRelation const& r) {
  Matrix m(r.size(), std::vector<bool>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      m[i][j] = r.contains(i, j);
    }
  }
  return m;
}

inline BinaryRelation from_matrix(Matrix const& m) {
  BinaryRelation r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j]) {
        r.insert(i, j);
      }
    }
  }
  return r;
}

// Least element of {z : x <= z and y <= z}, by scanning.
inline std::optional<std::size_t> lub(Matrix const& leq, std::size_t x, std::size_t y) {
  std::size_t const n = leq.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!(leq[x][z] && leq[y][z])) {
      continue;
    }
    bool least = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (leq[x][w] && leq[y][w] && !leq[z][w]) {
        least = false;
      }
    }
    if (least) {
      return z;
    }
  }
  return std::nullopt;
}

inline std::optional<std::size_t> glb(Matrix const& leq, std::size_t x, std::size_t y) {
  std::size_t const n = leq.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (!(leq[z][x] && leq[z][y])) {
      continue;
    }
    bool greatest = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (leq[w][x] && leq[w][y] && !leq[w][z]) {
        greatest = false;
      }
    }
    if (greatest) {
      return z;
    }
  }
  return std::nullopt;
}

struct Outcome {
  std::optional<Condition> violated;
  std::vector<std::size_t> witness;
};

// Literal reading of reflexivity, symmetry and conditions (1)-(4), first
// violation in lexicographic order of the quantified tuple.
inline Outcome check_tolerance(Matrix const& leq, Matrix const& r) {
  std::size_t const n = leq.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!r[x][x]) {
      return {Condition::reflexivity, {x}};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (r[x][y] && !r[y][x]) {
        return {Condition::symmetry, {x, y}};
      }
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          for (std::size_t u = 0; u < n; ++u) {
            if (!r[x][y] || !r[z][u]) {
              continue;
            }
            auto a = pass == 0 ? lub(leq, x, z) : glb(leq, x, z);
            auto b = pass == 0 ? lub(leq, y, u) : glb(leq, y, u);
            if (a && b && !r[*a][*b]) {
              return {pass == 0 ? Condition::c1 : Condition::c2, {x, y, z, u}};
            }
          }
        }
      }
    }
  }
  bool full = true;
  for (auto const& row : r) {
    for (bool b : row) {
      full = full && b;
    }
  }
  if (full) {
    return {};
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!r[x][y] || !r[y][z]) {
          continue;
        }
        bool found = false;
        for (std::size_t u = 0; u < n && !found; ++u) {
          for (std::size_t v = 0; v < n && !found; ++v) {
            found = leq[u][x] && leq[u][y] && leq[u][z] && leq[x][v] && leq[y][v] && leq[z][v]
                    && r[u][y] && r[y][v];
          }
        }
        if (!found) {
          return {Condition::c3, {x, y, z}};
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!r[x][y]) {
        continue;
      }
      bool found = false;
      for (std::size_t z = 0; z < n && !found; ++z) {
        for (std::size_t u = 0; u < n && !found; ++u) {
          if (!(r[z][u] && leq[z][x] && leq[z][y] && leq[x][u] && leq[y][u])) {
            continue;
          }
          bool all = true;
          for (std::size_t v = 0; v < n; ++v) {
            if (r[v][x] && r[v][y] && !(r[v][z] && r[v][u])) {
              all = false;
            }
          }
          found = all;
        }
      }
      if (!found) {
        return {Condition::c4, {x, y}};
      }
    }
  }
  return {};
}

inline Matrix compose(Matrix const& a, Matrix const& b) {
  std::size_t const n = a.size();
  Matrix out(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a[x][c] && b[c][y]) {
          out[x][y] = true;
        }
      }
    }
  }
  return out;
}

// All maximal cliques have exactly two elements iff the off-diagonal graph
// has no isolated vertex and no triangle.
inline bool pair_blocks_only(Matrix const& r) {
  std::size_t const n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    bool has_neighbor = false;
    for (std::size_t y = 0; y < n; ++y) {
      has_neighbor = has_neighbor || (y != x && r[x][y]);
    }
    if (!has_neighbor) {
      return false;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (r[x][y] && r[y][z] && r[x][z]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Every 2-uniform tolerance on p, by scanning all reflexive symmetric
// relations and evaluating the literal definitions.
inline std::vector<BinaryRelation> two_uniform_tolerances(Poset const& p) {
  Matrix const leq = order_matrix(p);
  std::size_t const n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      slots.emplace_back(a, b);
    }
  }
  std::vector<BinaryRelation> out;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << slots.size()); ++pattern) {
    Matrix r(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      r[a][a] = true;
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((pattern >> k) & 1U) {
        r[slots[k].first][slots[k].second] = true;
        r[slots[k].second][slots[k].first] = true;
      }
    }
    if (pair_blocks_only(r) && !check_tolerance(leq, r).violated) {
      out.push_back(from_matrix(r));
    }
  }
  return out;
}

// Literal reading of (5)-(8) with the existential quantifiers spelled out;
// neighbor uniqueness is not assumed. Witness order matches the library:
// outer element ascending, then inner element ascending.
class AmicabilityOracle {
 public:
  AmicabilityOracle(Matrix leq, Matrix t, Matrix s)
      : leq_(std::move(leq)), t_(std::move(t)), s_(std::move(s)), n_(leq_.size()) {}

  bool covers(std::size_t x, std::size_t y) const {
    if (x == y || !leq_[x][y]) {
      return false;
    }
    for (std::size_t z = 0; z < n_; ++z) {
      if (z != x && z != y && leq_[x][z] && leq_[z][y]) {
        return false;
      }
    }
    return true;
  }
  // x is a lower r-neighbor of y.
  bool lower(Matrix const& r, std::size_t x, std::size_t y) const { return covers(x, y) && r[x][y]; }

  bool bottom(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (lower(t_, a, b) && lower(s_, a, c)) {
          return true;  // split if b != c, adherent if b == c
        }
      }
    }
    return false;
  }
  bool top(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (lower(t_, b, a) && lower(s_, c, a)) {
          return true;
        }
      }
    }
    return false;
  }

  Outcome condition_5() const { return cross(false); }
  Outcome condition_6() const { return cross(true); }

  Outcome condition_7() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (top(a) && (lower(t_, a, b) || lower(s_, a, b)) && !top(b)) {
          return {Condition::c7, {a, b}};
        }
      }
    }
    return {};
  }
  Outcome condition_8() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (bottom(a) && (lower(t_, b, a) || lower(s_, b, a)) && !bottom(b)) {
          return {Condition::c8, {a, b}};
        }
      }
    }
    return {};
  }

  Outcome amicable() const {
    for (Outcome o : {condition_5(), condition_6(), condition_7(), condition_8()}) {
      if (o.violated) {
        return o;
      }
    }
    return {};
  }

 private:
  // dual = false: (5); dual = true: (6), with the order reversed.
  bool below(Matrix const& r, bool dual, std::size_t x, std::size_t y) const {
    return dual ? lower(r, y, x) : lower(r, x, y);
  }
  Outcome cross(bool dual) const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a == b) {
          continue;
        }
        for (std::size_t c = 0; c < n_; ++c) {
          if (!(below(t_, dual, c, a) && below(s_, dual, c, b))) {
            continue;
          }
          bool found = false;
          for (std::size_t d = 0; d < n_; ++d) {
            found = found || (below(s_, dual, a, d) && below(t_, dual, b, d));
          }
          if (!found) {
            return {dual ? Condition::c6 : Condition::c5, {a, b, c}};
          }
        }
      }
    }
    return {};
  }

  Matrix leq_;
  Matrix t_;
  Matrix s_;
  std::size_t n_;
};

}  // namespace oracle

}  // namespace ptol::test
