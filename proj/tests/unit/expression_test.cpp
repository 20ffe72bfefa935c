#include <gtest/gtest.h>

#include "qw22/errors.hpp"
#include "qw22/expression.hpp"
#include "qw22/sampling.hpp"

using namespace qw22;

namespace {

using G = GeneratorSymbol;

LaurentPoly Q(std::int64_t e) { return LaurentPoly::q_pow(e); }

}  // namespace

TEST(ParseExpression, Shapes) {
  EXPECT_EQ(parse_expression("L[2]*L[1]").to_string(), "(product L[2] L[1])");
  EXPECT_EQ(parse_expression("q^-1 * W[0] - 3*T^-1").to_string(),
            "(difference (product (^ q -1) W[0]) (product 3 (^ T -1)))");
  EXPECT_EQ(parse_expression("qbr(L[0], L[1]; q^-1, q)").to_string(),
            "(qbr L[0] L[1] (^ q -1) q)");
  EXPECT_EQ(parse_expression("-L[1] L[2]").to_string(), "(negate (product L[1] L[2]))");
  EXPECT_EQ(parse_expression(" ( q + 1 ) \n * L[ -4 ] ").to_string(),
            "(product (sum q 1) L[-4])");
}

TEST(ParseExpression, Errors) {
  try {
    parse_expression("L[1] +\n  * W[0]");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_expression("L[2"), ParseError);
  EXPECT_THROW(parse_expression("L[x]"), ParseError);
  EXPECT_THROW(parse_expression("X"), ParseError);
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("qbr(L[0], L[1], q, q)"), ParseError);
  EXPECT_THROW(parse_expression("L[2000000]"), ArithmeticBoundError);
  EXPECT_THROW(parse_expression("q^99999999999999999999"), ArithmeticBoundError);
}

TEST(EvaluateExpression, Examples) {
  EXPECT_EQ(parse_element("L[2]*L[1]"), normalize({G::L(2), G::L(1)}));
  EXPECT_EQ(parse_element("T^-1"), element_from(G::Tinv()));
  EXPECT_EQ(parse_element("T^-2 T^2"), Element::unit());
  EXPECT_EQ(parse_element("q^-1 * W[0] - 3*T^-1"),
            element_from(G::W(0)).scaled(Q(-1)) -
                element_from(G::Tinv()).scaled(LaurentPoly::constant(3)));
  EXPECT_EQ(parse_element("qbr(L[0], L[1]; q^-1, q)"), element_from(G::L(1)));
  EXPECT_EQ(parse_element("(q*T)^-2"), Element::term(NormalWord{-2, {}, {}}, Q(-2)));
  EXPECT_EQ(parse_element("123456789012345678901234567890"),
            Element::scalar(LaurentPoly::constant(Integer("123456789012345678901234567890"))));
}

TEST(EvaluateExpression, Errors) {
  EXPECT_THROW(parse_element("L[1]^-1"), UnsupportedInverseError);
  EXPECT_THROW(parse_element("(q + 1)^-1"), UnsupportedInverseError);
  EXPECT_THROW(parse_element("p * L[1]"), UnsupportedProfileError);
  EXPECT_THROW(parse_element("T L[1]", Deformation::generalized), UnsupportedProfileError);
  EXPECT_THROW(parse_element("qbr(L[0], L[1]; L[2], q)"), Error);
}

TEST(EvaluateExpression, GeneralizedProfile) {
  const Element x = parse_element("p^2 * L[1] W[0]", Deformation::generalized);
  EXPECT_EQ(x, normalize({G::L(1), G::W(0)}, Deformation::generalized)
                   .scaled(LaurentPoly::monomial(1, 0, 2, VarProfile::two_var)));
}

TEST(RoundTrip, PrintedElementsParseBack) {
  Rng rng(17);
  const WordShape shape{5, 6, true};
  for (int i = 0; i < 200; ++i) {
    const Element x = normalize(random_word(rng, shape)) -
                      normalize(random_word(rng, shape)).scaled(Q(3) + Q(-1));
    EXPECT_EQ(parse_element(x.to_string()), x) << x.to_string();
  }
  const WordShape t_free{4, 4, false};
  for (int i = 0; i < 100; ++i) {
    const Element x = normalize(random_word(rng, t_free), Deformation::generalized);
    EXPECT_EQ(parse_element(x.to_string(), Deformation::generalized), x) << x.to_string();
  }
  EXPECT_EQ(parse_element(Element().to_string()), Element());
}
