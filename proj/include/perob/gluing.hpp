#pragma once

// Gluing calculus on data sets.
//
// Two cone points (c_i, m) of D and (c~_j, m) of D~, both of degree n, are
// compatible when c_i + c~_j = 0 (mod m). Removing invariant disks around
// the two orbits (each of size n/m) and joining them by annuli gives an
// action of degree n whose data set drops both pairs and adds the quotient
// genera. A compatible pair inside one data set glues to itself the same
// way but raises the quotient genus by one.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/monodromy.hpp"

namespace perob {

/// All (i, j), 1-based, with n_i = n~_j and c_i + c~_j = 0 mod n_i.
/// Empty when the degrees differ.
inline std::vector<std::pair<int, int>> compatible_pairs(const DataSet& a, const DataSet& b) {
  std::vector<std::pair<int, int>> out;
  if (a.degree != b.degree) return out;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const ConePair& x = a.pair(i);
      const ConePair& y = b.pair(j);
      if (x.order == y.order && (x.residue + y.residue) % x.order == 0)
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

namespace detail {

inline void check_index(const DataSet& d, int i, const std::string& who) {
  if (i < 1 || static_cast<std::size_t>(i) > d.size())
    throw GluingError(who + ": index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(d.size()) + " for " + format(d));
}

inline bool pairs_compatible(const ConePair& x, const ConePair& y) {
  return x.order == y.order && (x.residue + y.residue) % x.order == 0;
}

inline std::string incompatible_text(const ConePair& x, const ConePair& y) {
  return pair_text(x) + " and " + pair_text(y) + " are not compatible";
}

}  // namespace detail

/// Glues cone i of `a` to cone j of `b` (1-based).
///
/// Throws GluingError on degree mismatch, bad indices or incompatibility.
inline DataSet glue(const DataSet& a, const DataSet& b, int i, int j) {
  if (a.degree != b.degree)
    throw GluingError("glue: degrees differ (" + std::to_string(a.degree) + " vs " +
                      std::to_string(b.degree) + ")");
  detail::check_index(a, i, "glue");
  detail::check_index(b, j, "glue");
  const ConePair& x = a.pair(static_cast<std::size_t>(i));
  const ConePair& y = b.pair(static_cast<std::size_t>(j));
  if (!detail::pairs_compatible(x, y)) throw GluingError("glue: " + detail::incompatible_text(x, y));

  DataSet out;
  out.degree = a.degree;
  out.quotient_genus = a.quotient_genus + b.quotient_genus;
  for (std::size_t k = 1; k <= a.size(); ++k)
    if (static_cast<int>(k) != i) out.cone_pairs.push_back(a.pair(k));
  for (std::size_t k = 1; k <= b.size(); ++k)
    if (static_cast<int>(k) != j) out.cone_pairs.push_back(b.pair(k));
  return out;
}

/// Glues cones r and s of one data set to each other. Needs at least four
/// cone points.
inline DataSet self_glue(const DataSet& d, int r, int s) {
  if (d.size() < 4)
    throw GluingError("self_glue: needs at least 4 cone points, " + format(d) + " has " +
                      std::to_string(d.size()));
  detail::check_index(d, r, "self_glue");
  detail::check_index(d, s, "self_glue");
  if (r == s) throw GluingError("self_glue: a cone point cannot be glued to itself");
  const ConePair& x = d.pair(static_cast<std::size_t>(r));
  const ConePair& y = d.pair(static_cast<std::size_t>(s));
  if (!detail::pairs_compatible(x, y))
    throw GluingError("self_glue: " + detail::incompatible_text(x, y));

  DataSet out = d;
  out.quotient_genus += 1;
  out.cone_pairs.clear();
  for (std::size_t k = 1; k <= d.size(); ++k)
    if (static_cast<int>(k) != r && static_cast<int>(k) != s) out.cone_pairs.push_back(d.pair(k));
  return out;
}

// ---------------------------------------------------------------------------
// Assemblies of marked irreducible pieces

struct PieceIndex {
  int piece = 1;  // 1-based
  int index = 1;  // 1-based cone index inside the piece
  friend bool operator==(const PieceIndex&, const PieceIndex&) = default;
};

struct GluingEdge {
  PieceIndex left;
  PieceIndex right;
  friend bool operator==(const GluingEdge&, const GluingEdge&) = default;
};

struct SelfEdge {
  int piece = 1;
  int r = 1;
  int s = 2;
  friend bool operator==(const SelfEdge&, const SelfEdge&) = default;
};

struct Assembly {
  std::vector<MarkedDataSet> pieces;
  std::vector<GluingEdge> edges;
  std::vector<SelfEdge> self_edges;
  // Each entry g' adds a genus-g' free orbit block: g0 += g', g += n*g'.
  std::vector<int> permutation_additions;
};

// What is left of one piece after gluing.
struct PieceLedger {
  int piece = 1;
  std::vector<int> surviving_marks;  // piece-local indices
  std::vector<int> result_marks;     // same orbits, indices in the result
  std::vector<int> glued_indices;    // piece-local
};

struct AssemblyResult {
  MarkedDataSet marked;
  bool mixed_signs = false;
  MonodromyWord word;
  std::vector<PieceLedger> ledger;
  std::vector<int> edge_orders;  // m per gluing edge, then per self edge
};

namespace detail {

inline std::string edge_text(const GluingEdge& e) {
  return "(" + std::to_string(e.left.index) + ":" + std::to_string(e.left.piece) + ")~(" +
         std::to_string(e.right.index) + ":" + std::to_string(e.right.piece) + ")";
}

inline std::string self_edge_text(const SelfEdge& e) {
  return "self(" + std::to_string(e.piece) + ":" + std::to_string(e.r) + "," +
         std::to_string(e.s) + ")";
}

}  // namespace detail

/// Throws GluingError (or InvalidInput for bad pieces) naming the first
/// offending piece or edge. Glued indices may also be marked; such marks
/// are consumed by the gluing.
inline void check_assembly(const Assembly& a) {
  if (a.pieces.empty()) throw InvalidInput("assembly has no pieces");
  const int np = static_cast<int>(a.pieces.size());
  const int n = a.pieces.front().base.degree;
  for (int p = 1; p <= np; ++p) {
    const MarkedDataSet& m = a.pieces[static_cast<std::size_t>(p - 1)];
    const ValidationReport rep = validate(m);
    if (!rep.valid())
      throw InvalidInput("piece " + std::to_string(p) + " " + format(m) + " is invalid: condition " +
                         rep.violations.front().condition + ": " + rep.violations.front().detail);
    if (!classify(m.base).is_irreducible_type1())
      throw InvalidInput("piece " + std::to_string(p) + " " + format(m) +
                         " is not irreducible Type 1");
    if (m.base.degree != n)
      throw GluingError("piece " + std::to_string(p) + " has degree " +
                        std::to_string(m.base.degree) + ", expected " + std::to_string(n));
  }
  for (int g : a.permutation_additions)
    if (g < 1) throw InvalidInput("permutation addition genus must be positive");

  std::vector<PieceIndex> used;
  auto use = [&](PieceIndex pi, const std::string& where) {
    if (pi.piece < 1 || pi.piece > np)
      throw GluingError(where + ": piece " + std::to_string(pi.piece) + " does not exist");
    const DataSet& d = a.pieces[static_cast<std::size_t>(pi.piece - 1)].base;
    if (pi.index < 1 || static_cast<std::size_t>(pi.index) > d.size())
      throw GluingError(where + ": index " + std::to_string(pi.index) + " out of range for piece " +
                        std::to_string(pi.piece));
    if (std::find(used.begin(), used.end(), pi) != used.end())
      throw GluingError(where + ": cone " + std::to_string(pi.index) + " of piece " +
                        std::to_string(pi.piece) + " is glued twice");
    used.push_back(pi);
    return d.pair(static_cast<std::size_t>(pi.index));
  };

  for (const GluingEdge& e : a.edges) {
    const std::string where = detail::edge_text(e);
    if (e.left.piece == e.right.piece)
      throw GluingError(where + ": both ends on one piece, use a self edge");
    const ConePair x = use(e.left, where);
    const ConePair y = use(e.right, where);
    if (!detail::pairs_compatible(x, y))
      throw GluingError(where + ": " + detail::incompatible_text(x, y));
  }
  for (const SelfEdge& e : a.self_edges) {
    const std::string where = detail::self_edge_text(e);
    if (e.r == e.s) throw GluingError(where + ": a cone point cannot be glued to itself");
    const ConePair x = use({e.piece, e.r}, where);
    const ConePair y = use({e.piece, e.s}, where);
    if (!detail::pairs_compatible(x, y))
      throw GluingError(where + ": " + detail::incompatible_text(x, y));
  }

  // Connectivity over pieces.
  std::vector<int> comp(static_cast<std::size_t>(np));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  for (const GluingEdge& e : a.edges)
    comp[static_cast<std::size_t>(find(e.left.piece - 1))] = find(e.right.piece - 1);
  for (int p = 1; p < np; ++p)
    if (find(p) != find(0))
      throw GluingError("piece " + std::to_string(p + 1) + " is not connected to piece 1");
}

/// Glues all pieces. Cone points are concatenated piece by piece and the
/// glued ones removed; surviving marks follow the same re-indexing. An edge
/// closing a cycle among already joined pieces acts as a self gluing.
inline AssemblyResult assemble(const Assembly& a) {
  check_assembly(a);
  const std::size_t np = a.pieces.size();

  std::vector<std::size_t> offset(np + 1, 0);
  for (std::size_t p = 0; p < np; ++p) offset[p + 1] = offset[p] + a.pieces[p].base.size();
  std::vector<bool> glued(offset[np], false);
  auto global = [&](PieceIndex pi) {
    return offset[static_cast<std::size_t>(pi.piece - 1)] + static_cast<std::size_t>(pi.index - 1);
  };

  AssemblyResult out;
  DataSet& d = out.marked.base;
  d.degree = a.pieces.front().base.degree;
  for (const auto& m : a.pieces) d.quotient_genus += m.base.quotient_genus;
  for (int g : a.permutation_additions) d.quotient_genus += g;

  std::vector<std::size_t> comp(np);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x];
    return x;
  };
  for (const GluingEdge& e : a.edges) {
    glued[global(e.left)] = glued[global(e.right)] = true;
    const std::size_t l = find(static_cast<std::size_t>(e.left.piece - 1));
    const std::size_t r = find(static_cast<std::size_t>(e.right.piece - 1));
    if (l == r)
      d.quotient_genus += 1;
    else
      comp[l] = r;
    out.edge_orders.push_back(
        a.pieces[static_cast<std::size_t>(e.left.piece - 1)].base.pair(static_cast<std::size_t>(e.left.index)).order);
  }
  for (const SelfEdge& e : a.self_edges) {
    glued[global({e.piece, e.r})] = glued[global({e.piece, e.s})] = true;
    d.quotient_genus += 1;
    out.edge_orders.push_back(
        a.pieces[static_cast<std::size_t>(e.piece - 1)].base.pair(static_cast<std::size_t>(e.r)).order);
  }

  std::vector<int> new_index(offset[np], 0);
  for (std::size_t p = 0; p < np; ++p) {
    const DataSet& b = a.pieces[p].base;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (glued[offset[p] + k]) continue;
      d.cone_pairs.push_back(b.cone_pairs[k]);
      new_index[offset[p] + k] = static_cast<int>(d.cone_pairs.size());
    }
  }

  out.marked.sign = a.pieces.front().sign;
  for (std::size_t p = 0; p < np; ++p) {
    const MarkedDataSet& m = a.pieces[p];
    if (m.sign != out.marked.sign) out.mixed_signs = true;
    PieceLedger led;
    led.piece = static_cast<int>(p + 1);
    for (std::size_t k = 0; k < m.base.size(); ++k)
      if (glued[offset[p] + k]) led.glued_indices.push_back(static_cast<int>(k + 1));
    for (int j : m.marks) {
      const std::size_t g = offset[p] + static_cast<std::size_t>(j - 1);
      if (glued[g]) continue;
      led.surviving_marks.push_back(j);
      led.result_marks.push_back(new_index[g]);
      out.marked.marks.push_back(new_index[g]);
    }
    out.ledger.push_back(std::move(led));
  }
  std::sort(out.marked.marks.begin(), out.marked.marks.end());

  // Word: Ext(1), then for each later piece the edges reaching it and its Ext.
  auto edge_token = [&](Sign s1, Sign s2, int id) -> WordToken {
    if (s1 != s2) return word::Annulus{id};
    return word::Twist{id, s1 == Sign::Positive ? 1 : -1, 0};
  };
  std::vector<bool> emitted(a.edges.size(), false);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
      const GluingEdge& ge = a.edges[e];
      if (emitted[e] || static_cast<std::size_t>(std::max(ge.left.piece, ge.right.piece)) != p + 1)
        continue;
      emitted[e] = true;
      out.word.tokens.push_back(edge_token(a.pieces[static_cast<std::size_t>(ge.left.piece - 1)].sign,
                                           a.pieces[static_cast<std::size_t>(ge.right.piece - 1)].sign,
                                           static_cast<int>(e + 1)));
    }
    out.word.tokens.push_back(word::Ext{static_cast<int>(p + 1)});
  }
  for (std::size_t e = 0; e < a.self_edges.size(); ++e) {
    const Sign s = a.pieces[static_cast<std::size_t>(a.self_edges[e].piece - 1)].sign;
    out.word.tokens.push_back(edge_token(s, s, static_cast<int>(a.edges.size() + e + 1)));
  }
  return out;
}

}  // namespace perob
