#pragma once

// Rational open books read off marked data sets.
//
// Removing invariant disks around the marked orbits leaves a page with
// boundary; the periodic map rotates each boundary orbit. For a mark j with
// cone pair (c_j, n_j) the first return to a boundary circle rotates it by
// 2*pi*slope with slope c_j^{-1}/n_j for a positive marking and
// c_j^{-1}/n_j - 1 for a negative one.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perob/arith.hpp"
#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/gluing.hpp"
#include "perob/monodromy.hpp"

namespace perob {

struct BoundaryOrbit {
  int id = 1;                // 1-based boundary orbit id inside the descriptor
  int source_mark = 0;       // cone index it came from, 0 for hand-built ones
  int orbit_size = 1;        // n / n_j circles
  Rational full_period_slope;
  Rational per_period_slope;
  bool invariant = true;     // n_j = n
  int resolved_from = 0;     // boundary id this one replaced, 0 if original

  // Fractional Dehn twist coefficient, defined for invariant boundaries only.
  std::optional<Rational> fdtc() const {
    if (!invariant) return std::nullopt;
    return full_period_slope;
  }
};

struct OpenBookDescriptor {
  int page_genus = 0;
  std::vector<BoundaryOrbit> boundaries;
  MonodromyWord monodromy;
  bool positive_word = true;  // every twist exponent is +1

  int boundary_circles() const {
    int k = 0;
    for (const auto& b : boundaries) k += b.orbit_size;
    return k;
  }
};

enum class Veering { RightVeering, LeftVeering, Mixed };

inline std::string veering_name(Veering v) {
  switch (v) {
    case Veering::RightVeering: return "right-veering";
    case Veering::LeftVeering: return "left-veering";
    case Veering::Mixed: return "mixed";
  }
  return "mixed";
}

/// Full-period slope of cone pair `p` under a marking of sign `s`.
inline Rational boundary_slope(const ConePair& p, Sign s) {
  const Rational base(mod_inverse(p.residue, p.order), p.order);
  return s == Sign::Positive ? base : base - Rational(1);
}

inline BoundaryOrbit make_boundary(int id, int mark, const ConePair& p, int degree, Sign s) {
  BoundaryOrbit b;
  b.id = id;
  b.source_mark = mark;
  b.orbit_size = degree / p.order;
  b.full_period_slope = boundary_slope(p, s);
  b.per_period_slope = b.full_period_slope / Rational(b.orbit_size);
  b.invariant = p.order == degree;
  return b;
}

namespace detail {

inline void append_rotations(OpenBookDescriptor& d) {
  for (const auto& b : d.boundaries)
    if (b.full_period_slope != Rational(0)) d.monodromy.tokens.push_back(word::Rot{b.id, b.full_period_slope});
  d.positive_word = d.monodromy.twists_positive();
}

}  // namespace detail

/// One boundary orbit per mark, in mark order; word Ext(1).Rot(...)...
///
/// Throws InvalidInput if `m` is not a valid marked data set.
inline OpenBookDescriptor page_descriptor(const MarkedDataSet& m) {
  const ValidationReport rep = validate(m);
  if (!rep.valid())
    throw InvalidInput("page_descriptor: " + format(m) + " is invalid: condition " +
                       rep.violations.front().condition + ": " + rep.violations.front().detail);
  OpenBookDescriptor d;
  d.page_genus = genus(m.base);
  int id = 0;
  for (int j : m.marks)
    d.boundaries.push_back(make_boundary(++id, j, m.base.pair(static_cast<std::size_t>(j)),
                                         m.base.degree, m.sign));
  d.monodromy.tokens.push_back(word::Ext{1});
  detail::append_rotations(d);
  return d;
}

/// Descriptor of an assembled page. Each surviving boundary keeps the sign
/// of the piece it came from; the word is the assembly word plus rotations.
inline OpenBookDescriptor page_descriptor(const Assembly& a, const AssemblyResult& r) {
  OpenBookDescriptor d;
  d.page_genus = genus(r.marked.base);
  struct Item {
    int result_mark;
    Sign sign;
  };
  std::vector<Item> items;
  for (const PieceLedger& led : r.ledger)
    for (int k : led.result_marks)
      items.push_back({k, a.pieces[static_cast<std::size_t>(led.piece - 1)].sign});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.result_mark < y.result_mark; });
  int id = 0;
  for (const Item& it : items)
    d.boundaries.push_back(make_boundary(++id, it.result_mark,
                                         r.marked.base.pair(static_cast<std::size_t>(it.result_mark)),
                                         r.marked.base.degree, it.sign));
  d.monodromy = r.word;
  detail::append_rotations(d);
  return d;
}

/// Coefficient used for veering: the boundary slope plus the exponents of
/// twists parallel to that boundary.
inline Rational effective_coefficient(const OpenBookDescriptor& d, const BoundaryOrbit& b) {
  Rational c = b.full_period_slope;
  for (const auto& t : d.monodromy.twists())
    if (t.parallel_to == b.id) c += Rational(t.exponent);
  return c;
}

/// Throws InvalidInput when there is no boundary.
inline Veering veering(const OpenBookDescriptor& d) {
  if (d.boundaries.empty()) throw InvalidInput("veering: descriptor has no boundary");
  bool all_nonneg = true, all_neg = true;
  for (const auto& b : d.boundaries) {
    const int s = effective_coefficient(d, b).sign();
    if (s < 0) all_nonneg = false;
    if (s >= 0) all_neg = false;
  }
  if (all_nonneg) return Veering::RightVeering;
  if (all_neg) return Veering::LeftVeering;
  return Veering::Mixed;
}

// ---------------------------------------------------------------------------
// Surgery

enum class SurgeryKind { None, Integral, Rational };

inline std::string surgery_kind_name(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::None: return "none";
    case SurgeryKind::Integral: return "integral";
    case SurgeryKind::Rational: return "rational";
  }
  return "none";
}

struct BoundarySurgery {
  int boundary = 1;
  Rational slope;  // q/p
  SurgeryKind kind = SurgeryKind::None;
  std::optional<Rational> topological;  // p/q on the binding of the integral open book
  std::optional<Rational> contact;      // -p/q admissible transverse surgery
  bool legendrian_realizable = false;   // p > q > 0
};

struct SurgeryDescription {
  std::vector<BoundarySurgery> boundaries;
};

/// Slope q/p = 0 needs no surgery; p = 1 is already an integral open book.
inline SurgeryDescription surgery_description(const OpenBookDescriptor& d) {
  SurgeryDescription out;
  for (const auto& b : d.boundaries) {
    BoundarySurgery s;
    s.boundary = b.id;
    s.slope = b.full_period_slope;
    const std::int64_t q = s.slope.num();
    const std::int64_t p = s.slope.den();
    if (q == 0) {
      s.kind = SurgeryKind::None;
    } else {
      s.kind = p == 1 ? SurgeryKind::Integral : SurgeryKind::Rational;
      s.topological = Rational(p, q);
      s.contact = -Rational(p, q);
      s.legendrian_realizable = p > q && q > 0;
    }
    out.boundaries.push_back(s);
  }
  return out;
}

/// "+6 transverse surgery", "-5 transverse surgery", "-5/2 ...".
inline std::string contact_surgery_text(const Rational& c) {
  return (c.sign() > 0 ? "+" : "") + c.str() + " transverse surgery";
}

// ---------------------------------------------------------------------------
// Integral resolution

/// Replaces every invariant boundary of slope -1/p by a p-punctured disk and
/// appends one negative twist parallel to each new boundary. Boundaries of
/// slope 0 are kept.
///
/// Throws UnsupportedResolution for any other boundary.
inline OpenBookDescriptor integral_resolution(const OpenBookDescriptor& d) {
  OpenBookDescriptor out;
  out.page_genus = d.page_genus;
  for (const auto& t : d.monodromy.tokens)
    if (!std::holds_alternative<word::Rot>(t)) out.monodromy.tokens.push_back(t);

  int curve = d.monodromy.max_curve_id();
  std::vector<word::Twist> new_twists;
  std::vector<std::pair<int, int>> renumber;  // kept boundary: old id -> new id
  int id = 0;
  for (const auto& b : d.boundaries) {
    const Rational& s = b.full_period_slope;
    if (s == Rational(0)) {
      BoundaryOrbit kept = b;
      kept.id = ++id;
      renumber.emplace_back(b.id, kept.id);
      out.boundaries.push_back(kept);
      continue;
    }
    if (!b.invariant)
      throw UnsupportedResolution("integral_resolution: boundary " + std::to_string(b.id) +
                                  " is a permuted orbit of size " + std::to_string(b.orbit_size));
    if (s.num() != -1)
      throw UnsupportedResolution("integral_resolution: boundary " + std::to_string(b.id) +
                                  " has slope " + s.str() + ", only -1/p is supported");
    const int p = static_cast<int>(s.den());
    for (int k = 0; k < p; ++k) {
      BoundaryOrbit nb;
      nb.id = ++id;
      nb.source_mark = b.source_mark;
      nb.orbit_size = 1;
      nb.full_period_slope = Rational(0);
      nb.per_period_slope = Rational(0);
      nb.invariant = true;
      nb.resolved_from = b.id;
      out.boundaries.push_back(nb);
      new_twists.push_back(word::Twist{++curve, -1, nb.id});
    }
  }
  // Old twists follow their boundary; a twist parallel to a resolved one
  // now sits inside the glued disk and is no longer boundary parallel.
  for (auto& t : out.monodromy.tokens)
    if (auto* tw = std::get_if<word::Twist>(&t); tw && tw->parallel_to != 0) {
      int to = 0;
      for (auto [o, nw] : renumber)
        if (o == tw->parallel_to) to = nw;
      tw->parallel_to = to;
    }
  for (const auto& t : new_twists) out.monodromy.tokens.push_back(t);
  detail::append_rotations(out);
  return out;
}

}  // namespace perob
