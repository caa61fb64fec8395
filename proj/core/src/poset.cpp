#include "ptol/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace ptol {

namespace {

void check_labels(std::vector<std::string> const& labels) {
  if (labels.size() > kMaxElements) {
    throw PosetError(PosetError::Kind::too_large,
                     "poset has " + std::to_string(labels.size()) + " elements, limit is "
                         + std::to_string(kMaxElements));
  }
  std::map<std::string_view, std::size_t> seen;
  for (std::string const& label : labels) {
    if (!seen.emplace(label, 0).second) {
      throw PosetError(PosetError::Kind::duplicate_label, "duplicate label '" + label + "'");
    }
  }
}

// Least element of s with respect to the up-set matrix, if any.
int least_of(BinaryRelation const& leq, Mask s) {
  int result = -1;
  for_each_bit(s, [&](Element z) {
    if (result < 0 && (s & ~leq.row(z)) == 0) {
      result = static_cast<int>(z);
    }
  });
  return result;
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, BinaryRelation leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  std::size_t const n = labels_.size();
  geq_ = inverse(leq_);
  covers_ = BinaryRelation(n);
  for (Element x = 0; x < n; ++x) {
    Mask const above = leq_.row(x) & ~bit(x);
    Mask minimal = 0;
    for_each_bit(above, [&](Element y) {
      Mask const strictly_below_y = geq_.row(y) & ~bit(y);
      if ((above & strictly_below_y) == 0) {
        minimal |= bit(y);
      }
    });
    covers_.set_row(x, minimal);
  }
  covered_by_ = inverse(covers_);

  join_.assign(n * n, kAbsent);
  meet_.assign(n * n, kAbsent);
  lattice_ = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      join_[x * n + y] = least_of(leq_, leq_.row(x) & leq_.row(y));
      meet_[x * n + y] = least_of(geq_, geq_.row(x) & geq_.row(y));
      if (join_[x * n + y] == kAbsent || meet_[x * n + y] == kAbsent) {
        lattice_ = false;
      }
    }
  }
}

Poset Poset::from_covers(std::vector<std::string> labels, std::span<LabelPair const> covers) {
  check_labels(labels);
  std::size_t const n = labels.size();
  auto lookup = [&](std::string const& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw PosetError(PosetError::Kind::unknown_label, "unknown label '" + label + "'");
    }
    return static_cast<Element>(it - labels.begin());
  };

  std::vector<ElementPair> indexed;
  indexed.reserve(covers.size());
  BinaryRelation leq = BinaryRelation::identity(n);
  for (auto const& [lo, hi] : covers) {
    Element const x = lookup(lo);
    Element const y = lookup(hi);
    indexed.emplace_back(x, y);
    leq.insert(x, y);
  }

  // Warshall closure on rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (leq.contains(i, k)) {
        leq.set_row(i, leq.row(i) | leq.row(k));
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq.contains(i, j) && leq.contains(j, i)) {
        throw PosetError(PosetError::Kind::cycle,
                         "cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }

  Poset p(std::move(labels), std::move(leq));
  BinaryRelation given(n);
  for (auto [x, y] : indexed) {
    if (!p.is_cover(x, y) || given.contains(x, y)) {
      throw PosetError(PosetError::Kind::redundant_pair,
                       "pair " + p.label(x) + "<" + p.label(y) + " is not a cover of the order");
    }
    given.insert(x, y);
  }
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels, BinaryRelation leq) {
  check_labels(labels);
  std::size_t const n = labels.size();
  if (leq.size() != n) {
    throw CarrierMismatch(n, leq.size());
  }
  if (!is_reflexive(leq)) {
    throw PosetError(PosetError::Kind::not_an_order, "order relation is not reflexive");
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq.contains(i, j) && leq.contains(j, i)) {
        throw PosetError(PosetError::Kind::cycle,
                         "cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
    Mask closure = leq.row(i);
    for_each_bit(leq.row(i), [&](Element k) { closure |= leq.row(k); });
    if (closure != leq.row(i)) {
      throw PosetError(PosetError::Kind::not_an_order, "order relation is not transitive");
    }
  }
  return Poset(std::move(labels), std::move(leq));
}

std::optional<Element> Poset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - labels_.begin());
}

std::optional<Element> Poset::join(Element x, Element y) const noexcept {
  int const z = join_[x * size() + y];
  if (z == kAbsent) {
    return std::nullopt;
  }
  return static_cast<Element>(z);
}

std::optional<Element> Poset::meet(Element x, Element y) const noexcept {
  int const z = meet_[x * size() + y];
  if (z == kAbsent) {
    return std::nullopt;
  }
  return static_cast<Element>(z);
}

bool Poset::is_convex(ElementSet const& s) const {
  if (s.carrier_size() != size()) {
    throw CarrierMismatch(size(), s.carrier_size());
  }
  // c lies between two members iff c is above some member and below some member.
  Mask above = 0;
  Mask below = 0;
  for_each_bit(s.bits(), [&](Element a) {
    above |= up_set(a);
    below |= down_set(a);
  });
  return ((above & below) & ~s.bits()) == 0;
}

Poset make_chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelPair> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) {
      covers.emplace_back(labels[i - 1], labels[i]);
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset make_antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return Poset::from_covers(std::move(labels), {});
}

Poset make_boolean_lattice(std::size_t atoms) {
  std::size_t const n = std::size_t{1} << atoms;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    labels.push_back("s" + std::to_string(s));
  }
  BinaryRelation leq(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if ((s & ~t) == 0) {
        leq.insert(s, t);
      }
    }
  }
  return Poset::from_order(std::move(labels), std::move(leq));
}

}  // namespace ptol
