#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ptol {

// Elements of a carrier are dense indices 0..n-1.
using Element = std::size_t;

// One row of a bit matrix; bit j set means column j is present.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Element i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= kMaxElements ? ~Mask{0} : bit(n) - 1;
}

constexpr bool has_bit(Mask m, Element i) noexcept { return ((m >> i) & 1U) != 0; }

// Calls f(i) for every set bit i, lowest first.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::optional<Element> lowest_bit(Mask m) noexcept {
  if (m == 0) {
    return std::nullopt;
  }
  return static_cast<Element>(std::countr_zero(m));
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two objects built over different carrier sizes are combined.
class CarrierMismatch : public Error {
 public:
  CarrierMismatch(std::size_t lhs, std::size_t rhs);
};

// A subset of the carrier 0..n-1 of a poset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t carrier_size, Mask members = 0);
  ElementSet(std::size_t carrier_size, std::initializer_list<Element> members);

  std::size_t carrier_size() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }

  bool contains(Element x) const noexcept { return x < n_ && has_bit(bits_, x); }
  void insert(Element x);
  void erase(Element x) noexcept { bits_ &= ~bit(x); }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  std::optional<Element> least() const noexcept { return lowest_bit(bits_); }
  std::vector<Element> members() const;

  bool is_subset_of(ElementSet const& other) const;

  friend bool operator==(ElementSet const&, ElementSet const&) = default;

 private:
  std::size_t n_ = 0;
  Mask bits_ = 0;
};

}  // namespace ptol
