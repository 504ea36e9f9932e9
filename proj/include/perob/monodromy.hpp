#pragma once

// Symbolic monodromy words. A word is read left to right as a product of
// generators; nothing here composes mapping classes, it only records which
// pieces, connecting annuli, twists and boundary rotations make up h.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "perob/arith.hpp"

namespace perob {

namespace word {

// Extension of the periodic map of one assembly piece (1-based).
struct Ext {
  int piece = 1;
  friend bool operator==(const Ext&, const Ext&) = default;
};

// Identity on the annulus joining two boundaries of opposite sign.
struct Annulus {
  int edge = 1;
  friend bool operator==(const Annulus&, const Annulus&) = default;
};

// Dehn twist T_c^{exponent}. `parallel_to` names the boundary the curve is
// parallel to, 0 when the curve is not boundary parallel.
struct Twist {
  int curve = 1;
  int exponent = 1;
  int parallel_to = 0;
  friend bool operator==(const Twist&, const Twist&) = default;
};

// Rotation of a boundary orbit by 2*pi*slope.
struct Rot {
  int boundary = 1;
  Rational slope;
  friend bool operator==(const Rot&, const Rot&) = default;
};

}  // namespace word

using WordToken = std::variant<word::Ext, word::Annulus, word::Twist, word::Rot>;

struct MonodromyWord {
  std::vector<WordToken> tokens;

  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;

  bool empty() const { return tokens.empty(); }

  std::vector<word::Twist> twists() const {
    std::vector<word::Twist> out;
    for (const auto& t : tokens)
      if (auto* tw = std::get_if<word::Twist>(&t)) out.push_back(*tw);
    return out;
  }

  // True when every twist is positive (an empty twist list counts).
  bool twists_positive() const {
    for (const auto& t : twists())
      if (t.exponent < 0) return false;
    return true;
  }

  int count_twists(int exponent) const {
    int k = 0;
    for (const auto& t : twists())
      if (t.exponent == exponent) ++k;
    return k;
  }

  int max_curve_id() const {
    int m = 0;
    for (const auto& t : twists()) m = std::max(m, t.curve);
    return m;
  }
};

inline std::string token_text(const WordToken& t) {
  struct V {
    std::string operator()(const word::Ext& e) const { return "Ext(" + std::to_string(e.piece) + ")"; }
    std::string operator()(const word::Annulus& a) const { return "A(" + std::to_string(a.edge) + ")"; }
    std::string operator()(const word::Twist& t) const {
      std::string s = "T(c" + std::to_string(t.curve) + ")";
      if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
      return s;
    }
    std::string operator()(const word::Rot& r) const {
      return "Rot(b" + std::to_string(r.boundary) + "," + r.slope.str() + ")";
    }
  };
  return std::visit(V{}, t);
}

// "Ext(1).A(1).Ext(2)"; the empty word renders as "1".
inline std::string format(const MonodromyWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) s += ".";
    s += token_text(w.tokens[i]);
  }
  return s;
}

}  // namespace perob
