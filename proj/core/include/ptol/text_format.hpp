#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ptol/poset.hpp"
#include "ptol/relation.hpp"

// Plain-text formats for posets and tolerances.
//
//   poset                      tolerance
//   elements: 0 a b 1          blocks: {0,a} {b,1}
//   covers: 0<a 0<b a<1 b<1      (or)  pairs: 0~a b~1
//
// Labels are nonempty strings over [A-Za-z0-9_]. Blank lines are ignored and
// '#' starts a comment running to the end of the line. The diagonal of a
// tolerance is implied.

namespace ptol {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // Message without the "line:column: " prefix.
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

bool is_valid_label(std::string_view label) noexcept;

// Syntax problems, duplicate labels and unknown labels raise ParseError;
// order-level problems (cycles, redundant covers) raise PosetError.
Poset parse_poset(std::string_view text);

// Returns the relation described by a tolerance file, diagonal included.
// The result is not validated against conditions (1)-(4).
BinaryRelation parse_tolerance(std::string_view text, Poset const& p);

std::string format_poset(Poset const& p);
// Writes a symmetric relation in the blocks form, one block per maximal clique.
std::string format_tolerance(Poset const& p, BinaryRelation const& r);
// "(a,b) (c,d) ..." in lexicographic index order.
std::string format_pairs(Poset const& p, BinaryRelation const& r);

}  // namespace ptol
