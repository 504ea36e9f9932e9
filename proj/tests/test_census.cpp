#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "perob/census.hpp"
#include "perob/parse.hpp"

using namespace perob;

namespace {

// Frozen counts from an independent brute-force enumerator (Python, exact
// fractions) over degree 1..12 and genus 0..4.
const std::map<std::pair<int, int>, std::size_t> kOracleCounts = {
    {{2, 0}, 1},  {{2, 1}, 2},  {{2, 2}, 2},  {{2, 3}, 3},  {{2, 4}, 3},   {{3, 0}, 1},  {{3, 1}, 4},
    {{3, 2}, 1},  {{3, 3}, 3},  {{3, 4}, 7},  {{4, 0}, 1},  {{4, 1}, 4},   {{4, 2}, 1},  {{4, 3}, 6},
    {{4, 4}, 4},  {{5, 0}, 2},  {{5, 1}, 4},  {{5, 2}, 4},  {{5, 3}, 0},   {{5, 4}, 7},  {{6, 0}, 1},
    {{6, 1}, 4},  {{6, 2}, 3},  {{6, 3}, 3},  {{6, 4}, 10}, {{7, 0}, 3},   {{7, 1}, 6},  {{7, 2}, 0},
    {{7, 3}, 8},  {{7, 4}, 0},  {{8, 0}, 2},  {{8, 1}, 4},  {{8, 2}, 2},   {{8, 3}, 6},  {{8, 4}, 2},
    {{9, 0}, 3},  {{9, 1}, 6},  {{9, 2}, 0},  {{9, 3}, 6},  {{9, 4}, 6},   {{10, 0}, 2}, {{10, 1}, 4},
    {{10, 2}, 4}, {{10, 3}, 0}, {{10, 4}, 10}, {{11, 0}, 5}, {{11, 1}, 10}, {{11, 2}, 0}, {{11, 3}, 0},
    {{11, 4}, 0}, {{12, 0}, 2}, {{12, 1}, 4}, {{12, 2}, 0}, {{12, 3}, 6},  {{12, 4}, 6}};

std::set<std::string> formatted(const std::vector<DataSet>& v) {
  std::set<std::string> out;
  for (const auto& d : v) out.insert(format(d));
  return out;
}

}  // namespace

TEST(Enumerate, DegreeTwoGenusOne) {
  EXPECT_EQ(formatted(enumerate(2, 1)), (std::set<std::string>{"(2,0;(1,2),(1,2),(1,2),(1,2))", "(2,1,1;-)"}));
}

TEST(Enumerate, DegreeSixGenusOne) {
  EXPECT_EQ(formatted(enumerate(6, 1)),
            (std::set<std::string>{"(6,0;(1,2),(1,3),(1,6))", "(6,0;(1,2),(2,3),(5,6))", "(6,1,1;-)", "(6,1,5;-)"}));
}

TEST(Enumerate, DegreeOneIsEmpty) {
  for (int g = 0; g <= 4; ++g) {
    EXPECT_TRUE(enumerate(1, g).empty());
    EXPECT_TRUE(enumerate_oracle(1, g).empty());
  }
}

TEST(Enumerate, FrozenCounts) {
  for (const auto& [key, count] : kOracleCounts)
    EXPECT_EQ(enumerate(key.first, key.second).size(), count) << key.first << "," << key.second;
}

TEST(Enumerate, MatchesOracle) {
  for (int n = 1; n <= 12; ++n)
    for (int g = 0; g <= 4; ++g) ASSERT_EQ(enumerate(n, g), enumerate_oracle(n, g)) << n << "," << g;
}

TEST(Enumerate, OutputIsValidCanonicalAndUnique) {
  for (int n = 2; n <= 16; ++n)
    for (int g = 0; g <= 5; ++g) {
      const auto v = enumerate(n, g);
      ASSERT_EQ(formatted(v).size(), v.size());
      for (const auto& d : v) {
        ASSERT_TRUE(validate(d).valid()) << format(d);
        ASSERT_EQ(genus(d), g);
        ASSERT_EQ(canonicalize(d).data, d);
      }
    }
}

TEST(Census, GenusTwo) {
  CensusQuery q;
  q.min_genus = q.max_genus = 2;
  const auto recs = census(q);
  EXPECT_EQ(recs.size(), 17u);
  std::map<int, int> per_degree;
  for (const auto& r : recs) ++per_degree[r.data.degree];
  EXPECT_EQ(per_degree, (std::map<int, int>{{2, 2}, {3, 1}, {4, 1}, {5, 4}, {6, 3}, {8, 2}, {10, 4}}));
  EXPECT_EQ(per_degree.rbegin()->first, 10);
}

TEST(Census, ThreadsDoNotChangeOutput) {
  CensusQuery q;
  q.min_genus = 2;
  q.max_genus = 3;
  q.threads = 1;
  const auto one = census(q);
  q.threads = 8;
  EXPECT_EQ(census(q), one);
  q.use_oracle = true;
  EXPECT_EQ(census(q), one);
}

TEST(Census, PolygonFlagOnlyForIrreducibleTypeOne) {
  CensusQuery q;
  q.min_genus = 0;
  q.max_genus = 3;
  q.max_degree = 14;
  for (const auto& r : census(q)) {
    EXPECT_EQ(r.polygon_verified.has_value(), r.action_class.is_irreducible_type1());
    if (r.polygon_verified) {
      EXPECT_TRUE(*r.polygon_verified) << format(r.data);
    }
  }
}

TEST(Census, ClassFilter) {
  CensusQuery q;
  q.min_genus = q.max_genus = 3;
  const auto all = census(q);
  q.action_class = ActionClass::type1(true);
  const auto some = census(q);
  EXPECT_LT(some.size(), all.size());
  for (const auto& r : some) EXPECT_TRUE(r.action_class.is_irreducible_type1());
}

TEST(Census, QueryChecks) {
  CensusQuery q;
  EXPECT_THROW(census(q), InvalidInput);  // genus 0 with no degree bound
  q.min_genus = 3;
  q.max_genus = 2;
  EXPECT_THROW(census(q), InvalidInput);
  q.max_genus = 3;
  q.degree = 0;
  EXPECT_THROW(census(q), InvalidInput);
  q.degree = 6;
  EXPECT_NO_THROW(census(q));
}

TEST(Census, DegreeCap) {
  EXPECT_FALSE(degree_cap(0).has_value());
  EXPECT_FALSE(degree_cap(1).has_value());
  EXPECT_EQ(*degree_cap(2), 10);
  for (int g = 2; g <= 4; ++g)
    for (int n = *degree_cap(g) + 1; n <= *degree_cap(g) + 6; ++n) EXPECT_TRUE(enumerate(n, g).empty());
}

TEST(CensusIo, RoundTrip) {
  CensusQuery q;
  q.min_genus = 2;
  q.max_genus = 3;
  const auto recs = census(q);
  std::stringstream ss;
  write_census(ss, recs);
  EXPECT_EQ(read_census(ss), recs);
}

TEST(CensusIo, RecordShape) {
  const Json j = to_json(make_record(parse_plain("(5,0;(1,5),(3,5),(1,5))")));
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["polygon_verified"], true);
  EXPECT_TRUE(to_json(make_record(parse_plain("(2,1,1;-)")))["polygon_verified"].is_null());
}

TEST(CensusIo, BadLineIsReported) {
  CensusQuery q;
  q.min_genus = q.max_genus = 2;
  std::stringstream ss;
  write_census(ss, census(q));
  ss.seekp(0, std::ios::end);
  ss << "{\"degree\": 5\n";
  try {
    read_census(ss);
    FAIL() << "expected CensusIoError";
  } catch (const CensusIoError& e) {
    EXPECT_EQ(e.line(), 18u);
  }
  std::stringstream missing("{\"degree\":5,\"quotient_genus\":0,\"rotation\":0,\"cone_pairs\":[[1,5],[3,5],[1,5]]}\n");
  EXPECT_THROW(read_census(missing), CensusIoError);
  EXPECT_THROW(read_census(std::string("/nonexistent/census.jsonl")), CensusIoError);
}
