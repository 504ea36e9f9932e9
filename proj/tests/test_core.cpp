#include <gtest/gtest.h>

#include "perob/census.hpp"
#include "perob/data_set.hpp"
#include "perob/parse.hpp"

using namespace perob;

namespace {

DataSet ds(const char* s) { return parse_plain(s); }

std::vector<std::string> conditions(const ValidationReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.violations) out.push_back(v.condition);
  return out;
}

}  // namespace

TEST(ModInverse, KnownValues) {
  EXPECT_EQ(mod_inverse(5, 6), 5);
  EXPECT_EQ(mod_inverse(3, 5), 2);
  EXPECT_EQ(mod_inverse(1, 7), 1);
  EXPECT_EQ(mod_inverse(-1, 7), 6);
  EXPECT_EQ(mod_inverse(13, 5), 2);
}

TEST(ModInverse, RejectsNonUnitsAndSmallModulus) {
  EXPECT_THROW(mod_inverse(2, 4), InvalidInput);
  EXPECT_THROW(mod_inverse(0, 5), InvalidInput);
  EXPECT_THROW(mod_inverse(1, 1), InvalidInput);
}

TEST(ModInverse, InverseTimesValueIsOne) {
  for (int m = 2; m <= 60; ++m)
    for (int c = 1; c < m; ++c) {
      if (std::gcd(c, m) != 1) continue;
      const auto x = mod_inverse(c, m);
      ASSERT_GE(x, 1);
      ASSERT_LT(x, m);
      ASSERT_EQ(c * x % m, 1) << c << " mod " << m;
    }
}

TEST(RationalArith, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ((Rational(1, 5) - Rational(1)).str(), "-4/5");
  EXPECT_EQ((Rational(1, 3) + Rational(2, 3)).str(), "1");
  EXPECT_LT(Rational(-1, 6), Rational(0));
  EXPECT_THROW(Rational(1, 0), InvalidInput);
}

TEST(Validate, HyperellipticTorusIsValid) {
  EXPECT_TRUE(validate(ds("(2,0;(1,2),(1,2),(1,2),(1,2))")).valid());
}

TEST(Validate, LcmConditionFailure) {
  const auto rep = validate(ds("(6,0;(1,2),(1,2),(1,6))"));
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.violates("iv"));
}

TEST(Validate, SumConditionFailure) {
  const auto rep = validate(ds("(5,0;(1,5),(1,5),(1,5))"));
  EXPECT_FALSE(rep.valid());
  EXPECT_EQ(conditions(rep), std::vector<std::string>{"v"});
}

TEST(Validate, ReportsEveryViolation) {
  // order 4 does not divide 6, residue 2 shares a factor with 4, and the sum fails
  const auto rep = validate(DataSet{6, 0, 0, {{2, 4}, {1, 3}, {1, 6}}});
  EXPECT_TRUE(rep.violates("ii"));
  EXPECT_TRUE(rep.violates("iii"));
  EXPECT_GE(rep.violations.size(), 3u);
}

TEST(Validate, RotationConvention) {
  EXPECT_TRUE(validate(ds("(2,1,1;-)")).valid());
  EXPECT_TRUE(validate(ds("(4,2,1;-)")).valid());
  EXPECT_TRUE(validate(ds("(4,2,1;-)")).valid());
  EXPECT_TRUE(validate(DataSet{4, 2, 2, {}}).violates("i"));  // gcd(2,4) = 2
  EXPECT_TRUE(validate(DataSet{4, 2, 0, {}}).violates("i"));  // no cone points needs r > 0
  EXPECT_TRUE(validate(DataSet{2, 0, 1, {{1, 2}, {1, 2}}}).violates("i"));
}

TEST(Validate, GenusIntegrality) {
  // (3,0;(1,3),(2,3),(1,3),(2,3),(1,3)) has 2g-2 = 3*(-2+10/3) = 4 -> fine;
  // (2,0;(1,2),(1,2),(1,2)) has 2g-2 = -1 -> not an integer genus
  const auto rep = validate(DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}}});
  EXPECT_TRUE(rep.violates("genus-integrality"));
}

TEST(Genus, KnownValues) {
  EXPECT_EQ(genus(ds("(2,0;(1,2),(1,2),(1,2),(1,2))")), 1);
  EXPECT_EQ(genus(ds("(5,0;(1,5),(3,5),(1,5))")), 2);
  EXPECT_EQ(genus(ds("(6,0;(1,2),(1,3),(1,6))")), 1);
  EXPECT_EQ(genus(ds("(2,1,1;-)")), 1);
  EXPECT_EQ(genus(ds("(6,0;(1,2),(1,2),(1,3),(2,3))")), 2);
}

TEST(Genus, ThreeFullOrderConesGiveHalfNMinusOne) {
  for (int n = 3; n <= 31; n += 2) {
    const DataSet d{n, 0, 0, {{1, n}, {1, n}, {n - 2, n}}};
    if (!validate(d).valid()) continue;
    EXPECT_EQ(genus(d), (n - 1) / 2) << format(d);
  }
}

TEST(Genus, FreeRotationFormula) {
  for (int n = 2; n <= 12; ++n)
    for (int g0 = 1; g0 <= 4; ++g0) EXPECT_EQ(genus(DataSet{n, g0, 1, {}}), n * (g0 - 1) + 1);
}

TEST(Genus, NonIntegralThrows) {
  EXPECT_THROW(genus(DataSet{2, 0, 0, {{1, 2}, {1, 2}, {1, 2}}}), InvalidInput);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(ds("(6,0;(1,2),(1,3),(1,6))")), ActionClass::type1(true));
  EXPECT_EQ(classify(ds("(3,1;(1,3),(2,3))")), ActionClass::rotational());
  EXPECT_EQ(classify(ds("(4,2,1;-)")), ActionClass::rotational());
  EXPECT_EQ(classify(ds("(5,0;(1,5),(4,5))")), ActionClass::rotational());
  EXPECT_EQ(classify(ds("(2,0;(1,2),(1,2),(1,2),(1,2))")), ActionClass::rotational());
  EXPECT_EQ(classify(ds("(6,0;(1,2),(1,2),(1,3),(2,3))")), ActionClass::type2());
}

TEST(Classify, NamesRoundTrip) {
  for (const auto& c : {ActionClass::rotational(), ActionClass::type1(false), ActionClass::type1(true),
                        ActionClass::type2()})
    EXPECT_EQ(ActionClass::from_name(c.name()), c);
  EXPECT_THROW(ActionClass::from_name("type3"), InvalidInput);
}

TEST(Canonicalize, SortsAndReportsPermutation) {
  const auto cf = canonicalize(ds("(6,0;(1,6),(1,2),(1,3))"));
  EXPECT_EQ(format(cf.data), "(6,0;(1,2),(1,3),(1,6))");
  EXPECT_EQ(cf.permutation, (std::vector<int>{2, 3, 1}));
}

TEST(Canonicalize, IdentityOnCanonicalInput) {
  const auto cf = canonicalize(ds("(6,0;(1,2),(1,3),(1,6))"));
  EXPECT_EQ(cf.permutation, (std::vector<int>{1, 2, 3}));
}

TEST(Canonicalize, TransportsMarks) {
  const MarkedDataSet m = parse_marked("(6_+,0;(1,6),(1,2),(1,3),[1,3])");
  const MarkedDataSet c = canonicalize(m);
  EXPECT_EQ(format(c), "(6_+,0;(1,2),(1,3),(1,6),[2,3])");
}

// Properties over the census for n <= 12, g <= 4.
class CensusProperties : public ::testing::Test {
 protected:
  static std::vector<DataSet> all() {
    std::vector<DataSet> out;
    for (int n = 1; n <= 12; ++n)
      for (int g = 0; g <= 4; ++g)
        for (const auto& d : enumerate(n, g)) out.push_back(d);
    return out;
  }
};

TEST_F(CensusProperties, GenusIsNonNegativeInteger) {
  for (const auto& d : all()) EXPECT_GE(genus(d), 0) << format(d);
}

TEST_F(CensusProperties, CanonicalizeIdempotentAndClassInvariant) {
  for (const auto& d : all()) {
    DataSet shuffled = d;
    std::reverse(shuffled.cone_pairs.begin(), shuffled.cone_pairs.end());
    const auto once = canonicalize(shuffled).data;
    EXPECT_EQ(once, d);
    EXPECT_EQ(canonicalize(once).data, once);
    EXPECT_EQ(classify(shuffled), classify(d)) << format(d);
  }
}

TEST_F(CensusProperties, FreeRotationGenus) {
  for (const auto& d : all())
    if (d.size() == 0) {
      EXPECT_EQ(genus(d), d.degree * (d.quotient_genus - 1) + 1);
    }
}
