#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "qw22/errors.hpp"
#include "qw22/laurent.hpp"

using namespace qw22;

namespace {

const auto kTwo = VarProfile::two_var;

LaurentPoly Q(std::int64_t e) { return LaurentPoly::q_pow(e); }

// (x^n - x^-n) / (x - x^-1) straight from the definition, over Q.
Rational q_int_value(std::int64_t n, const Rational& x) {
  Rational xn = 1;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) xn *= x;
  if (n < 0) xn = 1 / xn;
  return (xn - 1 / xn) / (x - 1 / x);
}

LaurentPoly random_poly(std::mt19937_64& rng, VarProfile vp, int max_terms) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::int64_t> exp(-6, 6);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<LaurentPoly::Term> terms;
  for (int i = count(rng); i > 0; --i) {
    terms.push_back({{exp(rng), vp == kTwo ? exp(rng) : 0}, Integer(coeff(rng))});
  }
  return LaurentPoly::from_terms(std::move(terms), vp);
}

}  // namespace

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ(Q(1) * Q(-1), LaurentPoly::one());
  EXPECT_EQ((Q(1) + Q(-1)) + -Q(-1), Q(1));
  EXPECT_EQ(q_int(2) * q_int(2), Q(2) + LaurentPoly::constant(2) + Q(-2));
  EXPECT_TRUE((Q(3) - Q(3)).is_zero());
}

TEST(LaurentPoly, CanonicalForm) {
  const auto p = LaurentPoly::from_terms({{{2, 0}, 3}, {{-1, 0}, 1}, {{2, 0}, -3}},
                                         VarProfile::one_var);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p, Q(-1));
  EXPECT_EQ(p.coefficient({2, 0}), 0);
}

TEST(LaurentPoly, Power) {
  EXPECT_EQ((Q(1) + Q(-1)).pow(0), LaurentPoly::one());
  EXPECT_EQ(LaurentPoly::monomial(-1, 3).pow(-2), Q(-6));
  EXPECT_EQ(LaurentPoly::monomial(-1, 3).pow(-3), -Q(-9));
  EXPECT_THROW(LaurentPoly::monomial(-2, 3).pow(-2), UnsupportedInverseError);
  EXPECT_THROW(LaurentPoly::monomial(2, 3).pow(-1), UnsupportedInverseError);
  EXPECT_THROW((Q(1) + Q(-1)).pow(-1), UnsupportedInverseError);
}

TEST(LaurentPoly, ProfileMismatchIsRejected) {
  EXPECT_THROW(Q(1) + LaurentPoly::p(), UnsupportedProfileError);
  EXPECT_THROW(Q(1) * LaurentPoly::q(kTwo), UnsupportedProfileError);
}

TEST(LaurentPoly, ExponentOverflowIsAnError) {
  const auto big = Q(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big * Q(1), ArithmeticBoundError);
  EXPECT_THROW(big.shifted(1), ArithmeticBoundError);
  EXPECT_THROW(Q(1LL << 40).pow(1LL << 40), ArithmeticBoundError);
}

TEST(QInt, Examples) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), LaurentPoly::one());
  EXPECT_EQ(q_int(2), Q(1) + Q(-1));
  EXPECT_EQ(q_int(-3), -q_int(3));
  EXPECT_EQ(q_int(2, kTwo), LaurentPoly::q(kTwo) + LaurentPoly::p());
}

TEST(QInt, OneVariableIsAntisymmetric) {
  for (std::int64_t n = -64; n <= 64; ++n) EXPECT_EQ(q_int(-n), -q_int(n)) << n;
}

TEST(QInt, TwoVariableNegativeIndex) {
  // (q^-n - p^-n)/(q - p) = -(qp)^-n [n]^c.
  const LaurentPoly qp = LaurentPoly::monomial(1, 1, 1, kTwo);
  for (std::int64_t n = -64; n <= 64; ++n) {
    EXPECT_EQ(q_int(-n, kTwo), -(qp.pow(-n) * q_int(n, kTwo))) << n;
  }
}

TEST(QInt, ExactDivisionContracts) {
  const LaurentPoly q1 = Q(1) - Q(-1);
  const LaurentPoly qp = LaurentPoly::q(kTwo) - LaurentPoly::p();
  for (std::int64_t n = -20; n <= 20; ++n) {
    EXPECT_EQ(q1 * q_int(n), Q(n) - Q(-n)) << n;
    EXPECT_EQ(qp * q_int(n, kTwo),
              LaurentPoly::monomial(1, n, 0, kTwo) - LaurentPoly::monomial(1, 0, n, kTwo))
        << n;
  }
}

TEST(QInt, MatchesDefinitionNumerically) {
  for (const Rational x : {Rational(2), Rational(3, 2), Rational(-5, 7)}) {
    for (std::int64_t n = -12; n <= 12; ++n) {
      EXPECT_EQ(q_int(n).evaluate(x), q_int_value(n, x)) << n;
    }
  }
}

TEST(QInt, TwoVariableSpecializesToOneVariable) {
  for (std::int64_t n = -30; n <= 30; ++n) {
    EXPECT_EQ(q_int(n, kTwo).substitute_p(-1), q_int(n)) << n;
  }
}

TEST(QIdentity, Holds) {
  EXPECT_TRUE(q_identity_check(1, 1));
  EXPECT_TRUE(q_identity_check(5, -3));
  for (std::int64_t k = -16; k <= 16; ++k) EXPECT_TRUE(q_identity_check(0, k));
  for (std::int64_t m = -16; m <= 16; ++m) {
    for (std::int64_t n = -16; n <= 16; ++n) EXPECT_TRUE(q_identity_check(m, n));
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(q_int(2).evaluate(2), Rational(5, 2));
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(q_int(n).evaluate(1), n);
  EXPECT_EQ(LaurentPoly::one().evaluate(Rational(7, 3)), 1);
  EXPECT_EQ(q_int(3, kTwo).evaluate(2, Rational(1, 2)), Rational(4 + 1 + Rational(1, 4)));
}

TEST(Evaluate, DomainErrors) {
  EXPECT_THROW(Q(-1).evaluate(0), DomainError);
  EXPECT_THROW(LaurentPoly::p().evaluate(2), DomainError);
  EXPECT_THROW(LaurentPoly::p().evaluate(2, Rational(0)), DomainError);
  EXPECT_THROW(Q(1).evaluate(2, Rational(3)), UnsupportedProfileError);
}

TEST(LaurentPoly, RingAxiomsOnRandomOperands) {
  std::mt19937_64 rng(11);
  for (auto vp : {VarProfile::one_var, kTwo}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = random_poly(rng, vp, 40);
      const auto b = random_poly(rng, vp, 40);
      const auto c = random_poly(rng, vp, 40);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(LaurentPoly, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(12);
  const Rational x(3, 2), y(-2, 5);
  for (auto vp : {VarProfile::one_var, kTwo}) {
    const std::optional<Rational> p =
        vp == kTwo ? std::optional<Rational>(y) : std::nullopt;
    for (int i = 0; i < 100; ++i) {
      const auto a = random_poly(rng, vp, 12);
      const auto b = random_poly(rng, vp, 12);
      EXPECT_EQ((a * b).evaluate(x, p), a.evaluate(x, p) * b.evaluate(x, p));
      EXPECT_EQ((a + b).evaluate(x, p), a.evaluate(x, p) + b.evaluate(x, p));
    }
  }
}

TEST(LaurentPoly, TextRoundTrip) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((Q(1) + Q(-1)).to_string(), "q^-1 + q");
  EXPECT_EQ((LaurentPoly::constant(-3) * Q(2)).to_string(), "-3*q^2");
  std::mt19937_64 rng(13);
  for (auto vp : {VarProfile::one_var, kTwo}) {
    for (int i = 0; i < 100; ++i) {
      const auto a = random_poly(rng, vp, 10);
      EXPECT_EQ(LaurentPoly::parse(a.to_string(), vp), a) << a.to_string();
    }
  }
}

TEST(LaurentPoly, ParseErrors) {
  EXPECT_THROW(LaurentPoly::parse("q^"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("2 +"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("p"), ParseError);
}

TEST(Rationals, Parse) {
  EXPECT_EQ(parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(to_string(Rational(5, 2)), "5/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Binomial, PascalRow) {
  EXPECT_EQ(binomial(6, 0), 1);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(6, 7), 0);
  for (int n = 1; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}
