#include "ptol/element_set.hpp"

#include <string>

namespace ptol {

CarrierMismatch::CarrierMismatch(std::size_t lhs, std::size_t rhs)
    : Error("carrier mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)
            + " elements") {}

ElementSet::ElementSet(std::size_t carrier_size, Mask members) : n_(carrier_size), bits_(members) {
  if (n_ > kMaxElements) {
    throw Error("carrier of " + std::to_string(n_) + " elements exceeds the limit of "
                + std::to_string(kMaxElements));
  }
  if ((bits_ & ~full_mask(n_)) != 0) {
    throw Error("element set has members outside the carrier");
  }
}

ElementSet::ElementSet(std::size_t carrier_size, std::initializer_list<Element> members)
    : ElementSet(carrier_size) {
  for (Element x : members) {
    insert(x);
  }
}

void ElementSet::insert(Element x) {
  if (x >= n_) {
    throw Error("element " + std::to_string(x) + " outside carrier of size " + std::to_string(n_));
  }
  bits_ |= bit(x);
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each_bit(bits_, [&](Element x) { out.push_back(x); });
  return out;
}

bool ElementSet::is_subset_of(ElementSet const& other) const {
  if (n_ != other.n_) {
    throw CarrierMismatch(n_, other.n_);
  }
  return (bits_ & ~other.bits_) == 0;
}

}  // namespace ptol
