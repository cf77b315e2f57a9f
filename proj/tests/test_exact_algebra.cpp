// SPDX-License-Identifier: Apache-2.0
#include "bihar/quadratic.hpp"
#include "bihar/surd.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

using namespace bihar;
using testing_support::Gen;
using testing_support::q;

TEST(Rational, CanonicalSignAndGcd) {
  Rational r = make_rational(4, -6);
  EXPECT_EQ(num(r), -2);
  EXPECT_EQ(den(r), 3);
  EXPECT_GT(den(make_rational(-5, -10)), 0);
  EXPECT_THROW(make_rational(1, 0), AlgebraError);
}

TEST(Rational, ParsesFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("6/7"), Rational(6) / 7);
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3) / 4);
  EXPECT_EQ(parse_rational("0.25"), Rational(1) / 4);
  EXPECT_EQ(parse_rational("1.5e-2"), Rational(3) / 200);
  EXPECT_EQ(parse_rational("2E3"), Rational(2000));
  EXPECT_THROW(parse_rational("1/0"), AlgebraError);
  EXPECT_THROW(parse_rational("abc"), AlgebraError);
  EXPECT_THROW(parse_rational(""), AlgebraError);
}

// Leading zeros must not switch the integer parser to octal.
TEST(Rational, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_rational("010/08"), Rational(5) / 4);
  EXPECT_EQ(parse_rational("-007"), Rational(-7));
  EXPECT_EQ(parse_rational("+3/009"), Rational(1) / 3);
  EXPECT_EQ(parse_rational("0.05"), Rational(1) / 20);
  EXPECT_EQ(parse_rational("09"), Rational(9));
  EXPECT_EQ(parse_rational("3/-6"), Rational(-1) / 2);
}

TEST(Surd, CanonicalForm) {
  Surd a(0, 1, 8);  // √8 = 2√2
  EXPECT_EQ(a.q(), 2);
  EXPECT_EQ(a.d(), 2);
  Surd b(1, 2, 4);  // 1 + 2·2
  EXPECT_TRUE(b.is_rational());
  EXPECT_EQ(b.p(), 5);
  EXPECT_EQ(b.d(), 0);
  Surd c(Rational(1), Rational(0), Rational(7));
  EXPECT_EQ(c.q(), 0);
  EXPECT_EQ(c.d(), 0);
  Surd e(0, 1, Rational(1) / 12);  // √(1/12) = √3/6
  EXPECT_EQ(e.q(), Rational(1) / 6);
  EXPECT_EQ(e.d(), 3);
  EXPECT_THROW(Surd(0, 1, -3), AlgebraError);
}

TEST(Surd, CanonicalizationIsIdempotent) {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    Surd s(g.rational(50, 20), g.rational(50, 20), Rational(g.integer(0, 400)) / Rational(g.integer(1, 30)));
    Surd again(s.p(), s.q(), s.d());
    EXPECT_EQ(again.p(), s.p());
    EXPECT_EQ(again.q(), s.q());
    EXPECT_EQ(again.d(), s.d());
  }
}

TEST(Surd, FieldArithmetic) {
  Surd r = Surd::sqrt_of(3);
  EXPECT_EQ(r * r, Surd(3));
  Surd x = Surd(2) + r;
  EXPECT_EQ(x * x.conjugate(), Surd(1));
  EXPECT_EQ(Surd(1) / x, Surd(2) - r);
  EXPECT_THROW(Surd(1) / Surd(0), AlgebraError);
  EXPECT_THROW(Surd::sqrt_of(2) + Surd::sqrt_of(3), AlgebraError);
}

TEST(Surd, SurdToFloatExamples) {
  EXPECT_EQ(surd_to_float(Surd(0, 1, 2), 10), oracle::kSqrt2_10);
  EXPECT_EQ(surd_to_float(Surd(Rational(5) / 6, Rational(1) / 30, 649), 12), oracle::kH2Dim6_12);
  EXPECT_EQ(surd_to_float(q(1, 2), 5), "0.50000");
}

TEST(Surd, SignAndOrdering) {
  EXPECT_EQ(Surd(4, -2, 3).sign(), 1);  // 4 − 2√3 ≈ 0.536
  EXPECT_EQ(Surd(3, -2, 3).sign(), -1);
  EXPECT_EQ(Surd(Rational(-7), Rational(4), Rational(3)).sign(), -1);
  EXPECT_EQ(compare(Surd::sqrt_of(2), Surd::sqrt_of(3)), std::partial_ordering::less);
  EXPECT_EQ(compare(Surd(7, -4, 3), Surd(0)), std::partial_ordering::greater);
}

// Ordering against a rational must agree with a 50-digit decimal evaluation.
TEST(Surd, OrderingMatchesDecimalEvaluation) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Gen g(2024);
  int decided = 0;
  for (int i = 0; i < 1000; ++i) {
    Rational p = g.rational(200, 50), qq = g.rational(200, 50);
    Rational d = Rational(g.integer(1, 999));
    Surd s(p, qq, d);
    // every third probe sits within double rounding of the surd itself
    Rational r = (i % 3 == 0) ? rational_from_double(s.to_double()) : g.rational(400, 60);
    auto to_dec = [](const Rational& x) {
      return Dec(num(x).convert_to<std::string>()) / Dec(den(x).convert_to<std::string>());
    };
    Dec value = to_dec(s.p()) + to_dec(s.q()) * boost::multiprecision::sqrt(to_dec(s.d()));
    Dec diff = value - to_dec(r);
    int expect = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    int got = (s - Surd(r)).sign();
    ASSERT_EQ(got, expect) << to_string(s) << " vs " << to_string(r);
    decided += expect != 0;
  }
  EXPECT_GT(decided, 990);
}

TEST(Surd, MixedRadicandComparisonIsCertified) {
  // (25 + √649)/30 against √3: ordered by interval evaluation.
  Surd h(Rational(5) / 6, Rational(1) / 30, 649);
  EXPECT_EQ(compare(h, Surd::sqrt_of(3)), std::partial_ordering::less);
  EXPECT_EQ(compare(Surd::sqrt_of(5), Surd(2, 1, 2) - Surd(2)), std::partial_ordering::greater);
}

TEST(Surd, TextRoundTrip) {
  Gen g(5);
  for (int i = 0; i < 200; ++i) {
    Surd s(g.rational(99, 30), g.rational(99, 30), Rational(g.integer(0, 300)));
    EXPECT_EQ(parse_surd(to_string(s)), s) << to_string(s);
  }
  EXPECT_EQ(parse_surd("sqrt(8)"), Surd(0, 2, 2));
  EXPECT_EQ(parse_surd("  25/36 - 5/396*sqrt(649) "), Surd(Rational(25) / 36, Rational(-5) / 396, 649));
  EXPECT_THROW(parse_surd("2*sqrt("), AlgebraError);
}

TEST(Surd, JsonSchema) {
  Surd s(Rational(25) / 36, Rational(-5) / 396, 649);
  auto j = to_json(s);
  EXPECT_EQ(j["p"], "25/36");
  EXPECT_EQ(j["q"], "-5/396");
  EXPECT_EQ(j["d"], "649/1");
  EXPECT_TRUE(j["approx"].is_string());
  EXPECT_EQ(surd_from_json(j), s);
}

TEST(Quadratic, RootKinds) {
  RootSet none = solve_quadratic_exact(1, 0, 1);
  EXPECT_EQ(none.kind, RootKind::none);
  EXPECT_LT(none.discriminant, 0);
  RootSet one = solve_quadratic_exact(1, -2, 1);
  EXPECT_EQ(one.kind, RootKind::single);
  ASSERT_EQ(one.roots.size(), 1u);
  EXPECT_EQ(one.roots[0], Surd(1));
  RootSet two = solve_quadratic_exact(3, -4, 1);  // torus (1,3) at k = 0
  EXPECT_EQ(two.kind, RootKind::pair);
  EXPECT_EQ(two.roots[0], q(1, 3));
  EXPECT_EQ(two.roots[1], Surd(1));
  EXPECT_THROW(solve_quadratic_exact(0, 1, 1), AlgebraError);
}

// Roots substituted back vanish exactly; pairs come out ascending.
TEST(Quadratic, RootsSubstituteToZero) {
  Gen g(77);
  for (int i = 0; i < 500; ++i) {
    Rational a = g.rational(40, 9), b = g.rational(40, 9), c = g.rational(40, 9);
    if (a == 0) a = 1;
    RootSet rs = solve_quadratic_exact(a, b, c);
    for (const auto& z : rs.roots) EXPECT_EQ(evaluate_quadratic(a, b, c, z).sign(), 0);
    if (rs.kind == RootKind::pair) {
      EXPECT_EQ(compare(rs.roots[0], rs.roots[1]), std::partial_ordering::less);
      EXPECT_GT(rs.discriminant, 0);
    }
    if (rs.kind == RootKind::single) {
      EXPECT_EQ(rs.discriminant, 0);
    }
    if (rs.kind == RootKind::none) {
      EXPECT_LT(rs.discriminant, 0);
    }
  }
}

TEST(Interval, SqrtEnclosureIsTight) {
  Interval s = isqrt_interval(2, 45);
  EXPECT_LE(s.lo() * s.lo(), 2);
  EXPECT_GE(s.hi() * s.hi(), 2);
  EXPECT_LT(s.hi() - s.lo(), Rational(1) / pow10(44));
  EXPECT_EQ(Surd(Rational(25) / 36, Rational(-5) / 396, 649).enclose(40).lo() <= Rational(1), true);
  EXPECT_EQ(surd_to_float(Surd(Rational(25) / 36, Rational(-5) / 396, 649), 40), oracle::kA2Dim6_40);
}
