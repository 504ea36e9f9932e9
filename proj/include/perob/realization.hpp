#pragma once

// Polygon-with-side-pairing model of irreducible Type 1 actions.
//
// For D = (n,0;(c1,n1),(c2,n2),(c3,n)) the action is the rotation of a
// k-gon, k = 2n when n1,n2 != 2 and k = n otherwise, with sides paired by
//
//   k = 2n:  a_{2m+1}^{-1} ~ a_{2z}
//   k = n :  a_{m+1}^{-1}  ~ a_z          (0 <= m <= n-1)
//
// where z = m + q*j (mod n), q = (n/n2) * c3^{-1} and j = n2 - c2. A
// residue z = 0 stands for index n. Everything here is combinatorial; the
// report recomputes the genus of the identified CW complex independently.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "perob/arith.hpp"
#include "perob/data_set.hpp"
#include "perob/error.hpp"

namespace perob {

struct PolygonPresentation {
  int sides = 0;                 // k
  std::vector<int> partner;      // partner[s-1] = side glued to side s (1-based)
  std::vector<bool> reversed;    // true for the a^{-1} ~ a (orientable) form
  int rotation_step = 0;         // index shift realizing the rotation
  int q = 0;
  int j = 0;
  int z_offset = 0;              // q*j mod n, so z = m + z_offset
  // Original 1-based indices of the pairs used as (c1,n1),(c2,n2),(c3,n3).
  std::array<int, 3> pair_order{1, 2, 3};
  // Construction is meant for genus >= 2; smaller genus is still emitted, flagged.
  bool outside_hypotheses = false;
  // A side received two different partners from the formula.
  bool conflicting_assignment = false;

  int partner_of(int side) const { return partner.at(static_cast<std::size_t>(side - 1)); }
};

struct RealizationReport {
  int euler_genus = -1;  // -1 when the Euler characteristic is odd
  int rh_genus = -1;
  int vertex_classes = 0;
  bool involution_ok = false;
  bool equivariance_ok = false;

  bool genus_ok() const { return euler_genus >= 0 && euler_genus == rh_genus; }
  bool ok() const { return involution_ok && equivariance_ok && genus_ok(); }
};

namespace detail {

// Chooses which pair plays the role of (c3, n): a pair of full order, the
// last one when several qualify. When k = n the order-2 pair is put first;
// the formula only closes up to an involution with n1 = 2 in that case.
inline std::array<int, 3> realization_order(const DataSet& d) {
  int third = -1;
  for (int i = 3; i >= 1; --i)
    if (d.pair(static_cast<std::size_t>(i)).order == d.degree) {
      third = i;
      break;
    }
  std::array<int, 3> order{};
  int k = 0;
  for (int i = 1; i <= 3; ++i)
    if (i != third) order[static_cast<std::size_t>(k++)] = i;
  order[2] = third;
  const int n1 = d.pair(static_cast<std::size_t>(order[0])).order;
  const int n2 = d.pair(static_cast<std::size_t>(order[1])).order;
  if (n2 == 2 && n1 != 2) std::swap(order[0], order[1]);
  return order;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Builds the side-pairing for an irreducible Type 1 data set.
///
/// Throws InvalidInput if `d` is not a valid irreducible Type 1 data set.
inline PolygonPresentation polygon_realization(const DataSet& d) {
  if (!validate(d).valid()) throw InvalidInput("polygon_realization: invalid data set " + format(d));
  if (!classify(d).is_irreducible_type1())
    throw InvalidInput("polygon_realization: " + format(d) + " is not irreducible Type 1");

  const int n = d.degree;
  PolygonPresentation p;
  p.pair_order = detail::realization_order(d);
  const ConePair& first = d.pair(static_cast<std::size_t>(p.pair_order[0]));
  const ConePair& second = d.pair(static_cast<std::size_t>(p.pair_order[1]));
  const ConePair& third = d.pair(static_cast<std::size_t>(p.pair_order[2]));

  const bool doubled = first.order != 2 && second.order != 2;
  p.sides = doubled ? 2 * n : n;
  const int c3_inv = static_cast<int>(mod_inverse(third.residue, n));
  p.q = (n / second.order) * c3_inv;
  p.j = second.order - second.residue;
  p.z_offset = static_cast<int>(mod_floor(static_cast<std::int64_t>(p.q) * p.j, n));
  p.rotation_step = doubled ? 2 * c3_inv : c3_inv;
  p.outside_hypotheses = genus(d) < 2;

  const auto k = static_cast<std::size_t>(p.sides);
  p.partner.assign(k, 0);
  p.reversed.assign(k, true);

  // Generating relations first, then the induced partner of each target.
  std::vector<std::pair<int, int>> relations;
  for (int m = 0; m < n; ++m) {
    int z = static_cast<int>(mod_floor(m + p.z_offset, n));
    if (z == 0) z = n;
    if (doubled)
      relations.emplace_back(2 * m + 1, 2 * z);
    else
      relations.emplace_back(m + 1, z);
  }
  for (auto [s, t] : relations) {
    int& slot = p.partner[static_cast<std::size_t>(s - 1)];
    if (slot != 0 && slot != t) p.conflicting_assignment = true;
    if (slot == 0) slot = t;
  }
  for (auto [s, t] : relations) {
    int& slot = p.partner[static_cast<std::size_t>(t - 1)];
    if (slot == 0) slot = s;
  }
  return p;
}

/// Recomputes involution, equivariance and the genus of the identified
/// polygon (F = 1, E = k/2, V = vertex classes) and compares it with the
/// Riemann-Hurwitz genus of `d`.
inline RealizationReport verify_realization(const PolygonPresentation& p, const DataSet& d) {
  RealizationReport rep;
  rep.rh_genus = genus(d);
  const int k = p.sides;
  if (k <= 0 || p.partner.size() != static_cast<std::size_t>(k)) return rep;

  auto wrap = [k](int s) { return static_cast<int>(mod_floor(s - 1, k)) + 1; };

  rep.involution_ok = !p.conflicting_assignment;
  for (int s = 1; s <= k && rep.involution_ok; ++s) {
    const int t = p.partner_of(s);
    if (t < 1 || t > k || t == s || p.partner_of(t) != s) rep.involution_ok = false;
  }

  rep.equivariance_ok = rep.involution_ok;
  for (int s = 1; s <= k && rep.equivariance_ok; ++s) {
    if (p.partner_of(wrap(s + p.rotation_step)) != wrap(p.partner_of(s) + p.rotation_step))
      rep.equivariance_ok = false;
  }

  // Side s runs from vertex s-1 to vertex s (mod k).
  detail::UnionFind uf(static_cast<std::size_t>(k));
  auto vtx = [k](int v) { return static_cast<std::size_t>(mod_floor(v, k)); };
  for (int s = 1; s <= k; ++s) {
    const int t = p.partner_of(s);
    if (t < 1 || t > k) continue;
    if (p.reversed[static_cast<std::size_t>(s - 1)]) {
      uf.unite(vtx(s - 1), vtx(t));
      uf.unite(vtx(s), vtx(t - 1));
    } else {
      uf.unite(vtx(s - 1), vtx(t - 1));
      uf.unite(vtx(s), vtx(t));
    }
  }
  std::vector<std::size_t> roots;
  for (int v = 0; v < k; ++v) roots.push_back(uf.find(static_cast<std::size_t>(v)));
  std::sort(roots.begin(), roots.end());
  rep.vertex_classes = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());

  const int chi = rep.vertex_classes - k / 2 + 1;
  if ((2 - chi) % 2 == 0 && chi <= 2) rep.euler_genus = (2 - chi) / 2;
  return rep;
}

}  // namespace perob
