#include "ptol/text_format.hpp"

#include <cctype>
#include <vector>

#include "ptol/tolerance.hpp"

namespace ptol {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

struct Token {
  std::size_t column;  // 1-based
  std::string_view text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Non-blank lines with comments removed.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t const eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (std::size_t const hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && is_space(line.back())) {
      line.remove_suffix(1);
    }
    bool blank = true;
    for (char c : line) {
      blank = blank && is_space(c);
    }
    if (!blank) {
      out.push_back({number, line});
    }
  }
  return out;
}

std::vector<Token> split_tokens(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    std::size_t const start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    if (i > start) {
      out.push_back({start + 1, line.substr(start, i - start)});
    }
  }
  return out;
}

std::size_t first_non_space(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) {
    ++i;
  }
  return i;
}

// Expects a line reading exactly `word`.
void expect_header(std::vector<Line> const& lines, std::size_t index, std::string_view word,
                   std::size_t last_line) {
  if (index >= lines.size()) {
    throw ParseError(last_line + 1, 1, "expected '" + std::string(word) + "'");
  }
  Line const& line = lines[index];
  std::size_t const start = first_non_space(line.text);
  if (line.text.substr(start) != word) {
    throw ParseError(line.number, start + 1, "expected '" + std::string(word) + "'");
  }
}

// Expects "<key>:" and returns the column offset just past the colon.
std::size_t expect_key(Line const& line, std::string_view key) {
  std::size_t const start = first_non_space(line.text);
  std::string const with_colon = std::string(key) + ":";
  if (line.text.substr(start, with_colon.size()) != with_colon) {
    throw ParseError(line.number, start + 1, "expected '" + with_colon + "'");
  }
  return start + with_colon.size();
}

Element lookup(Poset const& p, std::string_view label, std::size_t line, std::size_t column) {
  if (auto idx = p.index_of(label)) {
    return *idx;
  }
  throw ParseError(line, column, "unknown label '" + std::string(label) + "'");
}

void check_label(std::string_view label, std::size_t line, std::size_t column) {
  if (!is_valid_label(label)) {
    throw ParseError(line, column, "invalid label '" + std::string(label) + "'");
  }
}

std::size_t last_line_number(std::vector<Line> const& lines) {
  return lines.empty() ? 0 : lines.back().number;
}

void expect_end(std::vector<Line> const& lines, std::size_t consumed) {
  if (lines.size() > consumed) {
    Line const& extra = lines[consumed];
    throw ParseError(extra.number, first_non_space(extra.text) + 1, "unexpected content");
  }
}

void parse_blocks(Line const& line, std::size_t offset, Poset const& p, BinaryRelation& r) {
  std::string_view const text = line.text;
  std::size_t i = offset;
  while (true) {
    while (i < text.size() && is_space(text[i])) {
      ++i;
    }
    if (i >= text.size()) {
      return;
    }
    if (text[i] != '{') {
      throw ParseError(line.number, i + 1, "expected '{'");
    }
    std::size_t const open = i;
    std::size_t const close = text.find('}', open);
    if (close == std::string_view::npos) {
      throw ParseError(line.number, open + 1, "unterminated block");
    }
    std::vector<Element> members;
    std::size_t pos = open + 1;
    while (pos <= close) {
      std::size_t end = text.find_first_of(",}", pos);
      std::size_t a = pos;
      std::size_t b = end;
      while (a < b && is_space(text[a])) {
        ++a;
      }
      while (b > a && is_space(text[b - 1])) {
        --b;
      }
      std::string_view const label = text.substr(a, b - a);
      if (label.empty()) {
        throw ParseError(line.number, a + 1, "empty label in block");
      }
      check_label(label, line.number, a + 1);
      members.push_back(lookup(p, label, line.number, a + 1));
      pos = end + 1;
    }
    for (Element x : members) {
      for (Element y : members) {
        r.insert(x, y);
      }
    }
    i = close + 1;
  }
}

void parse_pairs(Line const& line, std::size_t offset, Poset const& p, BinaryRelation& r) {
  for (Token const& tok : split_tokens(line.text, offset)) {
    std::size_t const sep = tok.text.find('~');
    if (sep == std::string_view::npos) {
      throw ParseError(line.number, tok.column, "expected 'x~y'");
    }
    std::string_view const lo = tok.text.substr(0, sep);
    std::string_view const hi = tok.text.substr(sep + 1);
    check_label(lo, line.number, tok.column);
    check_label(hi, line.number, tok.column + sep + 1);
    Element const x = lookup(p, lo, line.number, tok.column);
    Element const y = lookup(p, hi, line.number, tok.column + sep + 1);
    r.insert(x, y);
    r.insert(y, x);
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string const& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

bool is_valid_label(std::string_view label) noexcept {
  if (label.empty()) {
    return false;
  }
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') {
      return false;
    }
  }
  return true;
}

Poset parse_poset(std::string_view text) {
  std::vector<Line> const lines = logical_lines(text);
  std::size_t const last = last_line_number(lines);
  expect_header(lines, 0, "poset", last);
  if (lines.size() < 2) {
    throw ParseError(last + 1, 1, "expected 'elements:'");
  }

  Line const& elements = lines[1];
  std::vector<std::string> labels;
  std::vector<Token> const label_tokens = split_tokens(elements.text, expect_key(elements, "elements"));
  for (Token const& tok : label_tokens) {
    check_label(tok.text, elements.number, tok.column);
    for (std::string const& seen : labels) {
      if (seen == tok.text) {
        throw ParseError(elements.number, tok.column,
                         "duplicate label '" + std::string(tok.text) + "'");
      }
    }
    labels.emplace_back(tok.text);
  }
  if (labels.empty()) {
    throw ParseError(elements.number, elements.text.size() + 1, "poset has no elements");
  }

  if (lines.size() < 3) {
    throw ParseError(last + 1, 1, "expected 'covers:'");
  }
  Line const& covers_line = lines[2];
  std::vector<LabelPair> covers;
  for (Token const& tok : split_tokens(covers_line.text, expect_key(covers_line, "covers"))) {
    std::size_t const sep = tok.text.find('<');
    if (sep == std::string_view::npos) {
      throw ParseError(covers_line.number, tok.column, "expected 'x<y'");
    }
    std::string_view const lo = tok.text.substr(0, sep);
    std::string_view const hi = tok.text.substr(sep + 1);
    check_label(lo, covers_line.number, tok.column);
    check_label(hi, covers_line.number, tok.column + sep + 1);
    for (auto [label, column] : {std::pair{lo, tok.column}, std::pair{hi, tok.column + sep + 1}}) {
      bool known = false;
      for (std::string const& l : labels) {
        known = known || l == label;
      }
      if (!known) {
        throw ParseError(covers_line.number, column,
                         "unknown label '" + std::string(label) + "'");
      }
    }
    covers.emplace_back(std::string(lo), std::string(hi));
  }
  expect_end(lines, 3);
  return Poset::from_covers(std::move(labels), covers);
}

BinaryRelation parse_tolerance(std::string_view text, Poset const& p) {
  std::vector<Line> const lines = logical_lines(text);
  std::size_t const last = last_line_number(lines);
  expect_header(lines, 0, "tolerance", last);
  if (lines.size() < 2) {
    throw ParseError(last + 1, 1, "expected 'blocks:' or 'pairs:'");
  }
  BinaryRelation r = BinaryRelation::identity(p.size());
  Line const& body = lines[1];
  std::size_t const start = first_non_space(body.text);
  if (body.text.substr(start).starts_with("blocks:")) {
    parse_blocks(body, expect_key(body, "blocks"), p, r);
  } else if (body.text.substr(start).starts_with("pairs:")) {
    parse_pairs(body, expect_key(body, "pairs"), p, r);
  } else {
    throw ParseError(body.number, start + 1, "expected 'blocks:' or 'pairs:'");
  }
  expect_end(lines, 2);
  return r;
}

std::string format_poset(Poset const& p) {
  std::string out = "poset\nelements:";
  for (std::string const& label : p.labels()) {
    out += ' ';
    out += label;
  }
  out += "\ncovers:";
  for (auto [x, y] : p.cover_pairs()) {
    out += ' ';
    out += p.label(x) + "<" + p.label(y);
  }
  out += '\n';
  return out;
}

std::string format_tolerance(Poset const& p, BinaryRelation const& r) {
  std::string out = "tolerance\nblocks:";
  for (ElementSet const& block : maximal_cliques(r)) {
    if (block.size() < 2) {
      continue;
    }
    out += " {";
    bool first = true;
    for (Element x : block.members()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += p.label(x);
    }
    out += '}';
  }
  out += '\n';
  return out;
}

std::string format_pairs(Poset const& p, BinaryRelation const& r) {
  std::string out;
  for (auto [x, y] : r.pairs()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += "(" + p.label(x) + "," + p.label(y) + ")";
  }
  return out;
}

}  // namespace ptol
