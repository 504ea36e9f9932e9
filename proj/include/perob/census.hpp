#pragma once

// Exhaustive enumeration of data sets by degree and genus.
//
// Riemann-Hurwitz with m_j = n/n_j reads
//   2g - 2 + 2n - 2n*g0 = sum_j (n - m_j),
// every summand being at least n/2. That bounds g0 and the number of cone
// points, and leaves a finite search over divisor multisets and residues.
// Two independent searches live here: `enumerate` (budget recursion over
// sorted orders and residues) and `enumerate_oracle` (plain nested loops
// filtered by validate()).

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "perob/data_set.hpp"
#include "perob/error.hpp"
#include "perob/json_io.hpp"
#include "perob/realization.hpp"

namespace perob {

namespace detail {

inline std::vector<int> divisors_at_least_two(int n) {
  std::vector<int> out;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::vector<int> units(int m) {
  std::vector<int> out;
  for (int c = 1; c < m; ++c)
    if (std::gcd(c, m) == 1) out.push_back(c);
  return out;
}

// Orders in non-decreasing sequence with sum of (n - n/order) = budget.
inline void order_multisets(int n, const std::vector<int>& divs, std::size_t from, long budget,
                            std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (budget == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = from; k < divs.size(); ++k) {
    const long t = n - n / divs[k];
    if (t > budget) break;  // t grows with the order
    cur.push_back(divs[k]);
    order_multisets(n, divs, k, budget - t, cur, out);
    cur.pop_back();
  }
}

// Residues for sorted orders, non-decreasing within runs of equal order, so
// each multiset of pairs is produced once and already in canonical order.
inline void residue_choices(const DataSet& shape, std::size_t pos, std::int64_t sum,
                            DataSet& cur, std::vector<DataSet>& out) {
  const int n = shape.degree;
  if (pos == shape.size()) {
    if (mod_floor(sum, n) == 0) out.push_back(cur);
    return;
  }
  const int order = shape.cone_pairs[pos].order;
  int lo = 1;
  if (pos > 0 && cur.cone_pairs[pos - 1].order == order) lo = cur.cone_pairs[pos - 1].residue;
  for (int c = lo; c < order; ++c) {
    if (std::gcd(c, order) != 1) continue;
    cur.cone_pairs[pos].residue = c;
    residue_choices(shape, pos + 1, sum + static_cast<std::int64_t>(n / order) * c, cur, out);
  }
}

inline bool lcm_condition(int n, int g0, const std::vector<int>& orders) {
  if (orders.empty()) return true;
  const std::int64_t all = lcm_of(orders, [](int o) { return o; });
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::int64_t omit = 1;
    for (std::size_t k = 0; k < orders.size(); ++k)
      if (k != i) omit = std::lcm(omit, static_cast<std::int64_t>(orders[k]));
    if (omit != all) return false;
  }
  return g0 != 0 || all == n;
}

}  // namespace detail

/// Largest g0 allowed by Riemann-Hurwitz for degree n and genus g.
inline int max_quotient_genus(int n, int g) { return (2 * g - 2 + 2 * n) / (2 * n); }

/// All valid data sets of degree n and genus g, canonical and sorted.
inline std::vector<DataSet> enumerate(int n, int g) {
  std::vector<DataSet> out;
  if (n < 1 || g < 0) return out;
  const std::vector<int> divs = detail::divisors_at_least_two(n);
  for (int g0 = 0; g0 <= max_quotient_genus(n, g); ++g0) {
    const long budget = 2L * g - 2 + 2L * n - 2L * n * g0;
    if (budget < 0) continue;
    if (budget == 0) {
      // Free actions: one record per unit r.
      for (int r : detail::units(n)) {
        DataSet d{n, g0, r, {}};
        if (validate(d).valid()) out.push_back(d);
      }
      continue;
    }
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    detail::order_multisets(n, divs, 0, budget, cur, multisets);
    for (const auto& orders : multisets) {
      if (!detail::lcm_condition(n, g0, orders)) continue;
      DataSet shape{n, g0, 0, {}};
      for (int o : orders) shape.cone_pairs.push_back({1, o});
      DataSet work = shape;
      detail::residue_choices(shape, 0, 0, work, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute force: every g0 <= g + 1, every multiset of at most 4g + 4 orders
/// dividing n checked against exact Riemann-Hurwitz, every residue tuple,
/// kept when validate() passes, deduplicated by canonical form.
inline std::vector<DataSet> enumerate_oracle(int n, int g) {
  std::set<DataSet> found;
  if (n < 1 || g < 0) return {};
  const std::vector<int> divs = detail::divisors_at_least_two(n);
  const Rational target(2 * static_cast<std::int64_t>(g) - 2);
  for (int g0 = 0; g0 <= g + 1; ++g0) {
    for (int r = 1; r < n; ++r) {
      DataSet d{n, g0, r, {}};
      if (validate(d).valid() && euler_defect(d) == target) found.insert(d);
    }
    for (int l = 1; l <= 4 * g + 4; ++l) {
      // Multisets of size l as non-decreasing index vectors.
      std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
      if (divs.empty()) break;
      for (;;) {
        DataSet shape{n, g0, 0, {}};
        for (std::size_t k : idx) shape.cone_pairs.push_back({1, divs[k]});
        if (euler_defect(shape) == target) {
          // Full product of residues, all positions independent.
          std::vector<std::vector<int>> choice;
          for (const auto& p : shape.cone_pairs) choice.push_back(detail::units(p.order));
          std::vector<std::size_t> at(choice.size(), 0);
          for (;;) {
            DataSet d = shape;
            for (std::size_t k = 0; k < at.size(); ++k) d.cone_pairs[k].residue = choice[k][at[k]];
            if (validate(d).valid()) found.insert(canonicalize(d).data);
            std::size_t k = 0;
            while (k < at.size() && ++at[k] == choice[k].size()) at[k++] = 0;
            if (k == at.size()) break;
          }
        }
        // next non-decreasing index vector
        int k = l - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] + 1 == divs.size()) --k;
        if (k < 0) break;
        const std::size_t v = idx[static_cast<std::size_t>(k)] + 1;
        for (int t = k; t < l; ++t) idx[static_cast<std::size_t>(t)] = v;
      }
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Census

struct CensusRecord {
  DataSet data;
  int genus = 0;
  ActionClass action_class;
  std::optional<bool> polygon_verified;  // set for irreducible Type 1 only

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusQuery {
  int min_genus = 0;
  int max_genus = 0;
  std::optional<int> degree;       // only this degree
  std::optional<int> max_degree;   // required when min_genus <= 1 and no degree
  std::optional<ActionClass> action_class;
  bool use_oracle = false;
  unsigned threads = 0;            // 0 = hardware concurrency
};

/// Degree cap for genus g: 4g + 2 for g >= 2. Genus 0 and 1 carry actions of
/// every degree, so no cap exists there.
inline std::optional<int> degree_cap(int g) {
  if (g >= 2) return 4 * g + 2;
  return std::nullopt;
}

inline CensusRecord make_record(const DataSet& d) {
  CensusRecord r{d, genus(d), classify(d), std::nullopt};
  if (r.action_class.is_irreducible_type1())
    r.polygon_verified = verify_realization(polygon_realization(d), d).ok();
  return r;
}

/// Throws InvalidInput for an unbounded or inverted query.
inline std::vector<CensusRecord> census(const CensusQuery& q) {
  if (q.min_genus < 0 || q.max_genus < q.min_genus) throw InvalidInput("census: bad genus range");
  if (q.degree && *q.degree < 1) throw InvalidInput("census: degree must be positive");
  if (q.max_degree && *q.max_degree < 1) throw InvalidInput("census: max degree must be positive");
  if (!q.degree && !q.max_degree && q.min_genus <= 1)
    throw InvalidInput("census: genus 0 and 1 have actions of every degree; give a degree or max degree");

  std::vector<std::pair<int, int>> jobs;  // (n, g)
  for (int g = q.min_genus; g <= q.max_genus; ++g) {
    if (q.degree) {
      jobs.emplace_back(*q.degree, g);
      continue;
    }
    int cap = q.max_degree ? *q.max_degree : *degree_cap(g);
    if (auto c = degree_cap(g); c && q.max_degree) cap = std::min(cap, *c);
    for (int n = 1; n <= cap; ++n) jobs.emplace_back(n, g);
  }

  auto run = [&q](int n, int g) {
    std::vector<CensusRecord> recs;
    for (const DataSet& d : q.use_oracle ? enumerate_oracle(n, g) : enumerate(n, g)) {
      CensusRecord r = make_record(d);
      if (q.action_class && !(r.action_class == *q.action_class)) continue;
      recs.push_back(std::move(r));
    }
    return recs;
  };

  unsigned workers = q.threads ? q.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<CensusRecord>> parts(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += workers) {
    std::vector<std::future<std::vector<CensusRecord>>> fs;
    for (std::size_t k = start; k < std::min(jobs.size(), start + workers); ++k)
      fs.push_back(std::async(std::launch::async, run, jobs[k].first, jobs[k].second));
    for (std::size_t k = 0; k < fs.size(); ++k) parts[start + k] = fs[k].get();
  }

  std::vector<CensusRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return std::tie(a.genus, a.data) < std::tie(b.genus, b.data);
  });
  return out;
}

// ---------------------------------------------------------------------------
// JSONL persistence

inline Json to_json(const CensusRecord& r) {
  Json j = to_json(r.data);
  j["genus"] = r.genus;
  j["class"] = r.action_class.name();
  j["polygon_verified"] = r.polygon_verified ? Json(*r.polygon_verified) : Json(nullptr);
  return j;
}

/// Throws InvalidInput on a malformed record.
inline CensusRecord census_record_from_json(const Json& j) {
  ParsedDataSet v = data_set_from_json(j);
  if (!std::holds_alternative<DataSet>(v)) throw InvalidInput("census record must be unmarked");
  CensusRecord r;
  r.data = std::get<DataSet>(v);
  r.genus = detail::json_field<int>(j, "genus");
  r.action_class = ActionClass::from_name(detail::json_field<std::string>(j, "class"));
  if (!j.contains("polygon_verified")) throw InvalidInput("missing field 'polygon_verified'");
  if (!j["polygon_verified"].is_null()) {
    if (!j["polygon_verified"].is_boolean()) throw InvalidInput("field 'polygon_verified' has the wrong type");
    r.polygon_verified = j["polygon_verified"].get<bool>();
  }
  return r;
}

inline void write_census(std::ostream& os, const std::vector<CensusRecord>& recs) {
  for (const auto& r : recs) os << to_json(r).dump() << '\n';
  if (!os) throw CensusIoError("write failed", 0);
}

inline void write_census(const std::string& path, const std::vector<CensusRecord>& recs) {
  std::ofstream os(path);
  if (!os) throw CensusIoError("cannot open '" + path + "' for writing", 0);
  write_census(os, recs);
}

/// Throws CensusIoError naming the first bad line.
inline std::vector<CensusRecord> read_census(std::istream& is) {
  std::vector<CensusRecord> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(census_record_from_json(Json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw CensusIoError(std::string("malformed JSON: ") + e.what(), no);
    } catch (const Error& e) {
      throw CensusIoError(e.what(), no);
    }
  }
  if (is.bad()) throw CensusIoError("read failed", no);
  return out;
}

inline std::vector<CensusRecord> read_census(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CensusIoError("cannot open '" + path + "'", 0);
  return read_census(is);
}

}  // namespace perob
