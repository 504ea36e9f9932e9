#pragma once

// Recursive-descent parser for the tuple notation
//
//   dataset := "(" INT sign? "," INT ("," INT)? sep body ")"
//   sep     := ";" | ","
//   body    := "-" | pair ("," pair)* ("," marks)?
//   pair    := "(" INT "," INT ")"
//   sign    := "_+" | "_-"
//   marks   := "[" INT ("," INT)* "]"
//
// Whitespace is ignored. The subscript characters U+208A/U+208B and the
// minus sign U+2212 are accepted in place of "+", "-" so that values can be
// pasted from typeset text. A "," separator before the first pair is
// tolerated because some printed tuples use it; formatting always emits ";".

#include <array>
#include <cctype>
#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "perob/data_set.hpp"
#include "perob/error.hpp"

namespace perob {

using ParsedDataSet = std::variant<DataSet, MarkedDataSet>;

namespace detail {

class TupleParser {
 public:
  explicit TupleParser(std::string_view text) : text_(text) {}

  ParsedDataSet parse_data_set() {
    expect('(');
    DataSet d;
    d.degree = integer();
    std::optional<Sign> sign = try_sign();
    expect(',');
    d.quotient_genus = integer();
    skip_ws();
    if (peek() == ',' && next_is_digit_after_comma()) {
      ++pos_;
      d.rotation = integer();
    }
    skip_ws();
    if (peek() == ';' || peek() == ',') {
      ++pos_;
    } else {
      error("expected ';'");
    }

    std::optional<std::vector<int>> marks;
    skip_ws();
    if (try_minus()) {
      // free rotation, no cone points
    } else {
      push_pairs(d.cone_pairs);
      for (;;) {
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
        skip_ws();
        if (peek() == '[') {
          marks = mark_list();
          break;
        }
        push_pairs(d.cone_pairs);
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");

    if (sign.has_value() != marks.has_value())
      throw ParseError(sign ? "signed data set without a mark list"
                            : "mark list without a sign on the degree",
                       pos_);
    if (marks) return MarkedDataSet{std::move(d), *sign, std::move(*marks)};
    return d;
  }

  // "(i:a)~(j:b)" -> {i, a, j, b}
  std::array<int, 4> parse_edge() {
    std::array<int, 4> out{};
    expect('(');
    out[0] = integer();
    expect(':');
    out[1] = integer();
    expect(')');
    skip_ws();
    if (peek() == '~') {
      ++pos_;
    } else if (text_.substr(pos_, 3) == "\xE2\x88\xBC") {
      pos_ += 3;
    } else {
      error("expected '~'");
    }
    expect('(');
    out[2] = integer();
    expect(':');
    out[3] = integer();
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
    return out;
  }

  // "i:j" -> {i, j}
  std::array<int, 2> parse_index_pair() {
    std::array<int, 2> out{};
    out[0] = integer();
    expect(':');
    out[1] = integer();
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (pos_ >= text_.size()) error(std::string("unexpected end of input, expected '") + c + "'");
      error(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool try_minus() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool next_is_digit_after_comma() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  std::optional<Sign> try_sign() {
    skip_ws();
    if (peek() == '_') {
      ++pos_;
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        return Sign::Positive;
      }
      if (try_minus()) return Sign::Negative;
      error("expected '+' or '-' after '_'");
    }
    if (text_.substr(pos_, 3) == "\xE2\x82\x8A") {
      pos_ += 3;
      return Sign::Positive;
    }
    if (text_.substr(pos_, 3) == "\xE2\x82\x8B") {
      pos_ += 3;
      return Sign::Negative;
    }
    return std::nullopt;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > INT_MAX) {
        pos_ = start;
        error("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= text_.size()) error("unexpected end of input, expected an integer");
      error("expected an integer");
    }
    return static_cast<int>(v);
  }

  ConePair pair() {
    expect('(');
    ConePair p;
    p.residue = integer();
    expect(',');
    p.order = integer();
    expect(')');
    return p;
  }

  // a pair, optionally repeated: "(1,2)×4", "(1,2)x4" or "(1,2)*4"
  void push_pairs(std::vector<ConePair>& out) {
    const ConePair p = pair();
    skip_ws();
    bool repeated = false;
    if (peek() == 'x' || peek() == '*') {
      ++pos_;
      repeated = true;
    } else if (text_.substr(pos_, 2) == "\xC3\x97") {
      pos_ += 2;
      repeated = true;
    }
    const int times = repeated ? integer() : 1;
    if (times < 1 || times > 100000) error("bad repeat count");
    out.insert(out.end(), static_cast<std::size_t>(times), p);
  }

  std::vector<int> mark_list() {
    expect('[');
    std::vector<int> marks{integer()};
    for (;;) {
      skip_ws();
      if (peek() == ']') break;
      expect(',');
      marks.push_back(integer());
    }
    ++pos_;
    return marks;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a data set or marked data set. Only syntax is checked here;
/// semantic conditions are left to validate().
inline ParsedDataSet parse_data_set(std::string_view text) {
  return detail::TupleParser(text).parse_data_set();
}

inline DataSet parse_plain(std::string_view text) {
  ParsedDataSet v = parse_data_set(text);
  if (auto* d = std::get_if<DataSet>(&v)) return *d;
  throw ParseError("expected an unmarked data set", 0);
}

inline MarkedDataSet parse_marked(std::string_view text) {
  ParsedDataSet v = parse_data_set(text);
  if (auto* m = std::get_if<MarkedDataSet>(&v)) return *m;
  throw ParseError("expected a marked data set (sign and mark list)", 0);
}

/// Edge notation "(i:a)~(j:b)": cone i of piece a glued to cone j of piece b.
/// Returns {i, a, j, b}, all 1-based as written.
inline std::array<int, 4> parse_edge_notation(std::string_view text) {
  return detail::TupleParser(text).parse_edge();
}

/// "i:j" as used by `--at`.
inline std::array<int, 2> parse_index_pair(std::string_view text) {
  return detail::TupleParser(text).parse_index_pair();
}

inline std::string format(const ParsedDataSet& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

}  // namespace perob
