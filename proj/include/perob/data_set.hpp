#pragma once

// Data sets encoding conjugacy classes of cyclic actions on closed surfaces,
// and their marked variants describing surfaces with rotating boundary.
//
// A data set (n, g0, r; (c_1,n_1), ..., (c_l,n_l)) records the degree n,
// the genus g0 of the quotient orbifold, the free-rotation parameter r and,
// per cone point of the quotient, the local order n_i together with the
// residue c_i (the local rotation around the orbit is 2*pi*c_i^{-1}/n_i).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "perob/arith.hpp"
#include "perob/error.hpp"

namespace perob {

struct ConePair {
  int residue = 1;  // c_i, canonical representative in [1, order-1]
  int order = 2;    // n_i

  friend bool operator==(const ConePair&, const ConePair&) = default;
  friend auto operator<=>(const ConePair& a, const ConePair& b) {
    return std::tie(a.order, a.residue) <=> std::tie(b.order, b.residue);
  }
};

struct DataSet {
  int degree = 1;          // n
  int quotient_genus = 0;  // g0
  int rotation = 0;        // r, non-zero only for free rotations
  std::vector<ConePair> cone_pairs;

  std::size_t size() const { return cone_pairs.size(); }
  // 1-based access, matching the usual notation.
  const ConePair& pair(std::size_t i) const { return cone_pairs.at(i - 1); }

  friend bool operator==(const DataSet&, const DataSet&) = default;
  friend auto operator<=>(const DataSet& a, const DataSet& b) {
    return std::tie(a.degree, a.quotient_genus, a.rotation, a.cone_pairs) <=>
           std::tie(b.degree, b.quotient_genus, b.rotation, b.cone_pairs);
  }
};

enum class Sign { Positive, Negative };

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct MarkedDataSet {
  DataSet base;
  Sign sign = Sign::Positive;
  std::vector<int> marks;  // 1-based cone indices whose orbits become boundary

  friend bool operator==(const MarkedDataSet&, const MarkedDataSet&) = default;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string condition;  // "i".."v", "genus-integrality", "marks"
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool violates(const std::string& condition) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.condition == condition; });
  }
};

/// Twice the genus minus two, from the Riemann-Hurwitz relation
///   (2 - 2g)/n = 2 - 2 g0 + sum_j (1/n_j - 1).
/// Exact; the result need not be an even integer for invalid input.
inline Rational euler_defect(const DataSet& d) {
  Rational x = Rational(2 * static_cast<std::int64_t>(d.quotient_genus) - 2);
  for (const auto& p : d.cone_pairs) {
    if (p.order <= 0) throw InvalidInput("cone order must be positive");
    x += Rational(1) - Rational(1, p.order);
  }
  return x * Rational(d.degree);
}

namespace detail {

inline std::string pair_text(const ConePair& p) {
  return "(" + std::to_string(p.residue) + "," + std::to_string(p.order) + ")";
}

}  // namespace detail

/// Checks every defining condition and reports all failures, not only the first.
inline ValidationReport validate(const DataSet& d) {
  ValidationReport rep;
  auto fail = [&](const char* cond, std::string detail) {
    rep.violations.push_back({cond, std::move(detail)});
  };
  const int n = d.degree;
  const std::size_t l = d.size();

  if (n < 1) {
    fail("ii", "degree must be at least 1, got " + std::to_string(n));
    return rep;
  }
  if (d.quotient_genus < 0)
    fail("genus-integrality", "quotient genus must be non-negative");

  // (i) r > 0 exactly for free rotations; r must then be a unit mod n.
  if (d.rotation < 0 || d.rotation >= n) {
    fail("i", "rotation " + std::to_string(d.rotation) + " outside [0, n-1]");
  } else if (l == 0 && d.rotation == 0) {
    fail("i", "a data set without cone points needs a rotation r > 0");
  } else if (l > 0 && d.rotation != 0) {
    fail("i", "rotation must be 0 when cone points are present");
  } else if (d.rotation > 0 && std::gcd(d.rotation, n) != 1) {
    fail("i", "gcd(r, n) = " + std::to_string(std::gcd(d.rotation, n)) + " != 1");
  }

  bool orders_ok = true;
  for (std::size_t i = 0; i < l; ++i) {
    const ConePair& p = d.cone_pairs[i];
    const std::string where = "pair " + std::to_string(i + 1) + " " + detail::pair_text(p);
    if (p.order < 2) {
      fail("iii", where + ": order must be at least 2");
      orders_ok = false;
      continue;
    }
    if (n % p.order != 0) {
      fail("ii", where + ": " + std::to_string(p.order) + " does not divide " +
                     std::to_string(n));
    }
    if (p.residue < 1 || p.residue >= p.order) {
      fail("iii", where + ": residue not in [1, " + std::to_string(p.order - 1) + "]");
    } else if (std::gcd(p.residue, p.order) != 1) {
      fail("iii", where + ": gcd(c, n_i) != 1");
    }
  }
  if (!orders_ok) return rep;

  // (iv) lcm condition.
  if (l > 0) {
    const std::int64_t all = lcm_of(d.cone_pairs, [](const ConePair& p) { return p.order; });
    for (std::size_t i = 0; i < l; ++i) {
      std::int64_t omit = 1;
      for (std::size_t k = 0; k < l; ++k)
        if (k != i) omit = std::lcm(omit, static_cast<std::int64_t>(d.cone_pairs[k].order));
      if (omit != all) {
        fail("iv", "lcm omitting pair " + std::to_string(i + 1) + " is " +
                       std::to_string(omit) + " != " + std::to_string(all));
      }
    }
    if (d.quotient_genus == 0 && all != n) {
      fail("iv", "g0 = 0 but lcm of orders is " + std::to_string(all) + " != " +
                     std::to_string(n));
    }
  } else if (d.quotient_genus == 0 && n != 1) {
    fail("iv", "g0 = 0 with no cone points requires lcm() = 1 = n");
  }

  // (v) sum of (n/n_j) c_j vanishes mod n.
  std::int64_t sum = 0;
  for (const auto& p : d.cone_pairs)
    if (n % p.order == 0) sum += static_cast<std::int64_t>(n / p.order) * p.residue;
  if (mod_floor(sum, n) != 0) {
    fail("v", "sum of (n/n_j) c_j is " + std::to_string(sum) + ", not 0 mod " +
                  std::to_string(n));
  }

  const Rational twice_g_minus_2 = euler_defect(d);
  if (!twice_g_minus_2.is_integer() || mod_floor(twice_g_minus_2.num(), 2) != 0) {
    fail("genus-integrality", "Riemann-Hurwitz gives 2g-2 = " + twice_g_minus_2.str());
  } else if (twice_g_minus_2.num() < -2) {
    fail("genus-integrality", "Riemann-Hurwitz gives negative genus");
  }
  return rep;
}

/// Validates the base and the mark list (distinct, in range, non-empty).
inline ValidationReport validate(const MarkedDataSet& m) {
  ValidationReport rep = validate(m.base);
  if (m.marks.empty()) rep.violations.push_back({"marks", "mark list is empty"});
  std::vector<int> seen;
  for (int j : m.marks) {
    if (j < 1 || static_cast<std::size_t>(j) > m.base.size()) {
      rep.violations.push_back({"marks", "mark " + std::to_string(j) + " out of range"});
    } else if (std::find(seen.begin(), seen.end(), j) != seen.end()) {
      rep.violations.push_back({"marks", "mark " + std::to_string(j) + " repeated"});
    }
    seen.push_back(j);
  }
  return rep;
}

/// Genus of the surface carrying the action.
///
/// Throws InvalidInput when the Riemann-Hurwitz value is not a non-negative
/// integer.
inline int genus(const DataSet& d) {
  const Rational twice_g_minus_2 = euler_defect(d);
  if (!twice_g_minus_2.is_integer() || mod_floor(twice_g_minus_2.num(), 2) != 0)
    throw InvalidInput("Riemann-Hurwitz genus is not an integer (2g-2 = " +
                       twice_g_minus_2.str() + ")");
  const std::int64_t g = twice_g_minus_2.num() / 2 + 1;
  if (g < 0) throw InvalidInput("Riemann-Hurwitz genus is negative");
  return static_cast<int>(g);
}

// ---------------------------------------------------------------------------
// Classification

struct ActionClass {
  enum class Kind { Rotational, Type1, Type2 };
  Kind kind = Kind::Type2;
  bool irreducible = false;  // meaningful for Type1 only

  friend bool operator==(const ActionClass&, const ActionClass&) = default;

  static ActionClass rotational() { return {Kind::Rotational, false}; }
  static ActionClass type1(bool irreducible) { return {Kind::Type1, irreducible}; }
  static ActionClass type2() { return {Kind::Type2, false}; }

  bool is_irreducible_type1() const { return kind == Kind::Type1 && irreducible; }

  // "rotational", "type1", "type1-irreducible", "type2"
  std::string name() const {
    switch (kind) {
      case Kind::Rotational: return "rotational";
      case Kind::Type1: return irreducible ? "type1-irreducible" : "type1";
      case Kind::Type2: return "type2";
    }
    return "type2";
  }

  static ActionClass from_name(const std::string& s) {
    if (s == "rotational") return rotational();
    if (s == "type1") return type1(false);
    if (s == "type1-irreducible") return type1(true);
    if (s == "type2") return type2();
    throw InvalidInput("unknown action class '" + s + "'");
  }
};

namespace detail {

// Cone data of the form (s,n),(n-s,n) repeated k times, k = 1 iff n > 2.
inline bool is_rotational_pattern(const DataSet& d) {
  const int n = d.degree;
  const std::size_t l = d.size();
  if (l == 0 || l % 2 != 0) return false;
  const std::size_t k = l / 2;
  if ((k == 1) != (n > 2)) return false;
  for (const auto& p : d.cone_pairs)
    if (p.order != n) return false;
  std::vector<int> cs;
  for (const auto& p : d.cone_pairs) cs.push_back(p.residue);
  std::sort(cs.begin(), cs.end());
  const int s = cs.front();
  std::vector<int> expected;
  for (std::size_t i = 0; i < k; ++i) {
    expected.push_back(s);
    expected.push_back(n - s);
  }
  std::sort(expected.begin(), expected.end());
  return cs == expected;
}

}  // namespace detail

/// Rotational, Type 1 (three cone points, one of full order n) or Type 2.
/// Irreducible Type 1 additionally has a sphere quotient.
inline ActionClass classify(const DataSet& d) {
  if (d.rotation != 0 || detail::is_rotational_pattern(d)) return ActionClass::rotational();
  if (d.size() == 3) {
    const bool full = std::any_of(d.cone_pairs.begin(), d.cone_pairs.end(),
                                  [&](const ConePair& p) { return p.order == d.degree; });
    if (full) return ActionClass::type1(d.quotient_genus == 0);
  }
  return ActionClass::type2();
}

// ---------------------------------------------------------------------------
// Canonical form

struct CanonicalForm {
  DataSet data;
  // permutation[k] is the original 1-based index of the k-th canonical pair.
  std::vector<int> permutation;
};

/// Sorts cone pairs by (n_i, c_i); stable, so equal pairs keep their order.
inline CanonicalForm canonicalize(const DataSet& d) {
  std::vector<int> perm(d.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return d.cone_pairs[a - 1] < d.cone_pairs[b - 1];
  });
  CanonicalForm out{d, perm};
  for (std::size_t k = 0; k < perm.size(); ++k) out.data.cone_pairs[k] = d.cone_pairs[perm[k] - 1];
  return out;
}

/// Canonicalizes the base and transports the marks (kept sorted).
inline MarkedDataSet canonicalize(const MarkedDataSet& m) {
  const CanonicalForm cf = canonicalize(m.base);
  MarkedDataSet out{cf.data, m.sign, {}};
  for (int j : m.marks) {
    const auto it = std::find(cf.permutation.begin(), cf.permutation.end(), j);
    if (it == cf.permutation.end()) throw InvalidInput("mark out of range");
    out.marks.push_back(static_cast<int>(it - cf.permutation.begin()) + 1);
  }
  std::sort(out.marks.begin(), out.marks.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

/// Canonical text, e.g. "(6,0;(1,2),(1,3),(1,6))" or "(2,1,1;-)".
inline std::string format(const DataSet& d) {
  std::string s = "(" + std::to_string(d.degree) + "," + std::to_string(d.quotient_genus);
  if (d.rotation != 0 || d.cone_pairs.empty()) s += "," + std::to_string(d.rotation);
  s += ";";
  if (d.cone_pairs.empty()) s += "-";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += detail::pair_text(d.cone_pairs[i]);
  }
  return s + ")";
}

inline std::string format(const MarkedDataSet& m) {
  const DataSet& d = m.base;
  std::string s = "(" + std::to_string(d.degree) + "_" + sign_char(m.sign) + "," +
                  std::to_string(d.quotient_genus);
  if (d.rotation != 0 || d.cone_pairs.empty()) s += "," + std::to_string(d.rotation);
  s += ";";
  if (d.cone_pairs.empty()) s += "-";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += detail::pair_text(d.cone_pairs[i]);
  }
  s += ",[";
  for (std::size_t i = 0; i < m.marks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.marks[i]);
  }
  return s + "])";
}

}  // namespace perob
