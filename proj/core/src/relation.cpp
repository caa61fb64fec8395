#include "ptol/relation.hpp"

#include <string>

namespace ptol {

namespace {

void require_same_carrier(BinaryRelation const& r1, BinaryRelation const& r2) {
  if (r1.size() != r2.size()) {
    throw CarrierMismatch(r1.size(), r2.size());
  }
}

void require_in_carrier(std::size_t n, Element a, Element b) {
  if (a >= n || b >= n) {
    throw Error("pair (" + std::to_string(a) + "," + std::to_string(b)
                + ") outside carrier of size " + std::to_string(n));
  }
}

}  // namespace

BinaryRelation::BinaryRelation(std::size_t n) : rows_(n, 0) {
  if (n > kMaxElements) {
    throw Error("carrier of " + std::to_string(n) + " elements exceeds the limit of "
                + std::to_string(kMaxElements));
  }
}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n);
  for (Element a = 0; a < n; ++a) {
    r.rows_[a] = bit(a);
  }
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (Mask& row : r.rows_) {
    row = full_mask(n);
  }
  return r;
}

BinaryRelation BinaryRelation::from_pairs(std::size_t n, std::span<ElementPair const> pairs) {
  BinaryRelation r(n);
  for (auto [a, b] : pairs) {
    r.insert(a, b);
  }
  return r;
}

void BinaryRelation::insert(Element a, Element b) {
  require_in_carrier(size(), a, b);
  rows_[a] |= bit(b);
}

void BinaryRelation::erase(Element a, Element b) {
  require_in_carrier(size(), a, b);
  rows_[a] &= ~bit(b);
}

void BinaryRelation::set_row(Element a, Mask successors) {
  if (a >= size() || (successors & ~full_mask(size())) != 0) {
    throw Error("row outside carrier of size " + std::to_string(size()));
  }
  rows_[a] = successors;
}

std::size_t BinaryRelation::pair_count() const noexcept {
  std::size_t count = 0;
  for (Mask row : rows_) {
    count += static_cast<std::size_t>(std::popcount(row));
  }
  return count;
}

std::vector<ElementPair> BinaryRelation::pairs() const {
  std::vector<ElementPair> out;
  out.reserve(pair_count());
  for (Element a = 0; a < size(); ++a) {
    for_each_bit(rows_[a], [&](Element b) { out.emplace_back(a, b); });
  }
  return out;
}

BinaryRelation compose(BinaryRelation const& r1, BinaryRelation const& r2) {
  require_same_carrier(r1, r2);
  std::size_t const n = r1.size();
  BinaryRelation out(n);
  for (Element a = 0; a < n; ++a) {
    Mask acc = 0;
    for_each_bit(r1.row(a), [&](Element c) { acc |= r2.row(c); });
    out.set_row(a, acc);
  }
  return out;
}

BinaryRelation inverse(BinaryRelation const& r) {
  BinaryRelation out(r.size());
  for (Element a = 0; a < r.size(); ++a) {
    for_each_bit(r.row(a), [&](Element b) { out.insert(b, a); });
  }
  return out;
}

BinaryRelation unite(BinaryRelation const& r1, BinaryRelation const& r2) {
  require_same_carrier(r1, r2);
  BinaryRelation out(r1.size());
  for (Element a = 0; a < r1.size(); ++a) {
    out.set_row(a, r1.row(a) | r2.row(a));
  }
  return out;
}

BinaryRelation difference(BinaryRelation const& r1, BinaryRelation const& r2) {
  require_same_carrier(r1, r2);
  BinaryRelation out(r1.size());
  for (Element a = 0; a < r1.size(); ++a) {
    out.set_row(a, r1.row(a) & ~r2.row(a));
  }
  return out;
}

bool equals(BinaryRelation const& r1, BinaryRelation const& r2) {
  require_same_carrier(r1, r2);
  return r1 == r2;
}

bool is_subset(BinaryRelation const& r1, BinaryRelation const& r2) {
  require_same_carrier(r1, r2);
  for (Element a = 0; a < r1.size(); ++a) {
    if ((r1.row(a) & ~r2.row(a)) != 0) {
      return false;
    }
  }
  return true;
}

bool is_reflexive(BinaryRelation const& r) {
  for (Element a = 0; a < r.size(); ++a) {
    if (!r.contains(a, a)) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(BinaryRelation const& r) {
  for (Element a = 0; a < r.size(); ++a) {
    for (Element b = a + 1; b < r.size(); ++b) {
      if (r.contains(a, b) != r.contains(b, a)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ptol
