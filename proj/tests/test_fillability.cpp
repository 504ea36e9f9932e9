#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "perob/census.hpp"
#include "perob/fillability.hpp"
#include "perob/parse.hpp"

using namespace perob;

namespace {

MarkedDataSet md(const char* s) { return parse_marked(s); }

}  // namespace

TEST(Irreducible, PositiveIsStein) {
  const auto v = classify_irreducible(md("(5_+,0;(1,5),(3,5),(1,5),[1,3])"));
  EXPECT_EQ(v.verdict, Verdict::SteinFillable);
  EXPECT_EQ(v.certificate, certificate::positive_irreducible);
  EXPECT_TRUE(v.hypothesis("marks-full-order"));
  EXPECT_EQ(v.fired.front(), certificate::positive_irreducible);
}

TEST(Irreducible, NegativeOrderSixIsOvertwisted) {
  const auto v = classify_irreducible(md("(6_-,0;(1,2),(2,3),(5,6),[3])"));
  EXPECT_EQ(v.verdict, Verdict::Overtwisted);
  EXPECT_EQ(v.certificate, certificate::integral_resolution);
  EXPECT_TRUE(v.hypothesis("left-veering"));
  EXPECT_EQ(verdict_text(v), "Overtwisted (integral resolution: left-veering)");
}

TEST(Irreducible, PermutedNegativeIsUnknown) {
  const auto v = classify_irreducible(md("(6_-,0;(1,2),(1,3),(1,6),[2])"));
  EXPECT_EQ(v.verdict, Verdict::Unknown);
  EXPECT_EQ(v.certificate, certificate::none);
  EXPECT_FALSE(v.hypothesis("resolution-supported"));
}

TEST(Irreducible, NegativeWithoutMinusOneOverPIsUnknown) {
  // slope 2/5 - 1 = -3/5 is not of the form -1/p
  EXPECT_EQ(classify_irreducible(md("(5_-,0;(1,5),(1,5),(3,5),[3])")).verdict, Verdict::Unknown);
}

TEST(Irreducible, RejectsOtherClasses) {
  EXPECT_THROW(classify_irreducible(md("(6_+,0;(1,2),(1,2),(1,3),(2,3),[1])")), InvalidInput);
  EXPECT_THROW(classify_irreducible(md("(5_+,0;(1,5),(1,5),(1,5),[1])")), InvalidInput);
}

TEST(Assembly, OrderFiveIsStein) {
  Assembly a;
  a.pieces = {md("(5_+,0;(2,5),(1,5),(2,5),[1,2,3])"), md("(5_+,0;(1,5),(3,5),(1,5),[1,3])")};
  a.edges = {{{1, 1}, {2, 2}}};
  const auto v = classify_assembly(a);
  EXPECT_EQ(v.verdict, Verdict::SteinFillable);
  EXPECT_EQ(v.certificate, certificate::positive_assembly);
}

TEST(Assembly, ExhaustedPieceIsUnknown) {
  Assembly a;
  a.pieces = {md("(6_+,0;(1,2),(1,3),(1,6),[3])"), md("(6_+,0;(1,3),(5,6),(5,6),[2,3])")};
  a.edges = {{{1, 3}, {2, 3}}};
  const auto v = classify_assembly(a);
  EXPECT_EQ(v.verdict, Verdict::Unknown);
  EXPECT_FALSE(v.hypothesis("boundary-survives-each-edge"));
  EXPECT_TRUE(v.hypothesis("marks-full-order"));
}

TEST(Assembly, PermutedMarksOrMixedSignsAreUnknown) {
  Assembly a;
  a.pieces = {md("(6_+,0;(1,2),(1,3),(1,6),[1,3])"), md("(6_+,0;(1,2),(2,3),(5,6),[1,2,3])")};
  a.edges = {{{1, 3}, {2, 3}}};
  auto v = classify_assembly(a);
  EXPECT_EQ(v.verdict, Verdict::Unknown);
  EXPECT_FALSE(v.hypothesis("marks-full-order"));
  a.pieces[1].sign = Sign::Negative;
  v = classify_assembly(a);
  EXPECT_FALSE(v.hypothesis("all-pieces-positive"));
  EXPECT_EQ(v.verdict, Verdict::Unknown);
}

TEST(Assembly, CappedOffIsUnknown) {
  Assembly a;
  a.pieces = {md("(3_+,0;(1,3),(1,3),(1,3),[1])"), md("(3_+,0;(2,3),(2,3),(2,3),[1])")};
  a.edges = {{{1, 2}, {2, 2}}};
  EXPECT_EQ(classify_assembly(a).verdict, Verdict::SteinFillable);
  a.edges.push_back({{1, 3}, {2, 3}});
  EXPECT_EQ(classify_assembly(a).verdict, Verdict::Unknown);
}

TEST(PositiveWord, Slopes) {
  OpenBookDescriptor d;
  BoundaryOrbit b;
  b.full_period_slope = Rational(1, 5);
  d.boundaries = {b};
  b.id = 2;
  b.full_period_slope = Rational(2, 5);
  d.boundaries.push_back(b);
  auto v = classify_positive_word(d);
  EXPECT_EQ(v.verdict, Verdict::SteinFillable);
  EXPECT_EQ(v.certificate, certificate::positive_word_stein);

  d.boundaries = {b};
  d.boundaries[0].full_period_slope = Rational(1);
  EXPECT_EQ(classify_positive_word(d).verdict, Verdict::Unknown);
  d.boundaries[0].full_period_slope = Rational(-1, 6);
  EXPECT_EQ(classify_positive_word(d).verdict, Verdict::Unknown);

  d.boundaries[0].full_period_slope = Rational(1, 5);
  v = classify_positive_word(d);
  EXPECT_EQ(v.fired, (std::vector<std::string>{certificate::positive_word_stein, certificate::positive_word_strong}));

  d.monodromy.tokens.push_back(word::Twist{1, -1, 0});
  d.positive_word = false;
  EXPECT_THROW(classify_positive_word(d), InvalidInput);
}

TEST(PositiveWord, AgreesWithIrreducibleRuleOnFixedMarks) {
  int checked = 0;
  for (int n = 2; n <= 30; ++n)
    for (int g = 0; g <= n; ++g)
      for (const auto& d : enumerate(n, g)) {
        if (!classify(d).is_irreducible_type1()) continue;
        std::vector<int> marks;
        for (int j = 1; j <= 3; ++j)
          if (d.pair(static_cast<std::size_t>(j)).order == n) marks.push_back(j);
        const MarkedDataSet m{d, Sign::Positive, marks};
        ASSERT_EQ(classify_irreducible(m).verdict, Verdict::SteinFillable);
        ASSERT_EQ(classify_positive_word(page_descriptor(m)).verdict, Verdict::SteinFillable) << format(m);
        ++checked;
      }
  EXPECT_GT(checked, 500);
}

TEST(Verdicts, Deterministic) {
  const auto m = md("(6_-,0;(1,2),(2,3),(5,6),[3])");
  const auto a = classify_irreducible(m), b = classify_irreducible(m);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.hypotheses, b.hypotheses);
}

// ---------------------------------------------------------------------------
// Profiles

TEST(Profile, EndpointsAndCore) {
  const auto pp = build_profile(5, 1, 10, 3, 1024);
  EXPECT_DOUBLE_EQ(pp.f0.front(), 6);
  EXPECT_DOUBLE_EQ(pp.g0.front(), 0);
  EXPECT_DOUBLE_EQ(pp.f0[5], 6 - pp.r[5] * pp.r[5]);
  EXPECT_DOUBLE_EQ(pp.g0[5], pp.r[5] * pp.r[5]);
  EXPECT_NEAR(pp.f0.back(), -5 - 10, 1e-12);
  EXPECT_NEAR(pp.g0.back(), -1 + 50, 1e-12);
}

TEST(Profile, CaseTwoPasses) {
  const auto pp = build_profile(5, 1, default_K(5, 1), default_H(5, 1, default_K(5, 1)), 1024);
  const auto rep = verify_profile(pp, 1e-9);
  EXPECT_TRUE(rep.contact_ok);
  EXPECT_TRUE(rep.symplectic_ok);
  EXPECT_FALSE(rep.first_violation.has_value());
}

TEST(Profile, HonestOpenBookPasses) {
  const auto pp = build_profile(1, 0, 1, 5, 512);
  EXPECT_TRUE(verify_profile(pp, 1e-9).ok());
}

TEST(Profile, QAbovePViolatesNearCore) {
  // p < q: the arc itself breaks the symplectic condition
  const auto pp = build_profile(1, 2, 3, 5, 256);
  const auto rep = verify_profile(pp, 1e-9);
  EXPECT_FALSE(rep.symplectic_ok);
  ASSERT_TRUE(rep.first_violation.has_value());
  EXPECT_EQ(rep.first_violation->condition, "symplectic");
  EXPECT_LT(rep.first_violation->r, 0.05);
}

TEST(Profile, CorruptedSampleIsCaught) {
  auto pp = build_profile(5, 1, 3, 3, 256);
  pp.f0[128] += 1.0;  // a bump makes f0 increase locally
  EXPECT_FALSE(verify_profile(pp, 1e-9).ok());
}

TEST(Profile, Defaults) {
  EXPECT_EQ(default_K(5, 1), 2);   // K = 1 already gives f0(1) = -6 < 0 < 4
  EXPECT_EQ(default_H(5, 1, 2), 2);
  EXPECT_GT(default_K(5, -1), 1);
}

TEST(Profile, InputChecks) {
  EXPECT_THROW(build_profile(0, 1, 1, 1, 100), InvalidInput);
  EXPECT_THROW(build_profile(4, 2, 1, 1, 100), InvalidInput);
  EXPECT_THROW(build_profile(5, 1, -1, 1, 100), InvalidInput);
  EXPECT_THROW(verify_profile(build_profile(5, 1, 2, 2, 32), 1e-9), InvalidInput);
  auto pp = build_profile(5, 1, 2, 2, 100);
  pp.r[50] = pp.r[49];
  EXPECT_THROW(verify_profile(pp, 1e-9), InvalidInput);
}

TEST(Profile, SymplecticSignNearCore) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const int p = 1 + static_cast<int>(rng() % 20);
    int q = static_cast<int>(rng() % 41) - 20;
    if (std::gcd(p, q) != 1 || q == p) continue;
    const auto pp = build_profile(p, q, 3, 50, 1024);
    const double dr = pp.r[2] - pp.r[0];
    const double numeric = p * (pp.f0[2] - pp.f0[0]) / dr + q * (pp.g0[2] - pp.g0[0]) / dr;
    const double analytic = symplectic_near_core(p, q, pp.r[1]);
    EXPECT_NEAR(numeric, analytic, 1e-6);
    EXPECT_EQ(analytic > 0, q > p);
  }
}

TEST(Profile, CsvExport) {
  std::ostringstream os;
  write_profile_csv(os, build_profile(5, 1, 2, 2, 64));
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("r,f0,g0\n", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 65);
}
