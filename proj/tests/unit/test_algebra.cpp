#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "psiexp/poly_pt.hpp"
#include "psiexp/poly_t.hpp"
#include "psiexp/rational.hpp"
#include "psiexp/serialize.hpp"

namespace psiexp {
namespace {

using testing::random_polypt;
using testing::random_rational;

const PolyPT p = PolyPT::var_p();
const PolyPT t = PolyPT::var_t();

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "4");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator_string(), "1");
  EXPECT_EQ(Rational::from_strings("10", "-4"), Rational(-5, 2));
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").numerator_string(), "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1/-2", "1//2", " 1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(PolyT, BinomialSquare) {
  const PolyT a(std::vector<Rational>{Rational(-1, 2), 1});
  EXPECT_EQ(a * a, PolyT(std::vector<Rational>{Rational(1, 4), -1, 1}));
}

TEST(PolyT, ZeroHasNoDegree) {
  EXPECT_FALSE(PolyT().degree().has_value());
  EXPECT_FALSE(PolyT(std::vector<Rational>{0, 0}).degree().has_value());
  EXPECT_EQ(PolyT::constant(5).degree(), 0u);
  EXPECT_EQ((PolyT::variable() - PolyT::variable()).degree(), std::nullopt);
}

TEST(PolyT, DerivativeComposeAndPrint) {
  const PolyT b2(std::vector<Rational>{Rational(1, 6), -1, 1});
  EXPECT_EQ(b2.derivative(), PolyT(std::vector<Rational>{-1, 2}));
  EXPECT_EQ(b2.compose_affine(-1, 1), b2);
  EXPECT_EQ(b2.eval(Rational(1, 2)), Rational(-1, 12));
  EXPECT_EQ(b2.to_string(), "t^2 - t + 1/6");
  EXPECT_EQ(PolyT().to_string(), "0");
}

TEST(PolyPT, MulExamples) {
  const PolyPT a = t - PolyPT(Rational(1, 2));
  EXPECT_EQ(poly_mul(a, a), t * t - t + PolyPT(Rational(1, 4)));
  EXPECT_TRUE(poly_mul(a, PolyPT()).is_zero());
  EXPECT_TRUE(poly_mul(a, PolyPT()).terms().empty());
  EXPECT_EQ(poly_mul(p * t, p - PolyPT(1)), p * p * t - p * t);
}

TEST(PolyPT, EvalExamples) {
  const PolyPT g1 = p * (t - PolyPT(Rational(1, 2)));
  EXPECT_EQ(poly_eval_t(g1, 1), p * Rational(1, 2));
  EXPECT_EQ(poly_eval_t(PolyPT(Rational(3, 7)), 5), PolyPT(Rational(3, 7)));
  const PolyPT b2 = t * t - t + PolyPT(Rational(1, 6));
  EXPECT_EQ(poly_eval_t(b2, Rational(1, 2)), PolyPT(Rational(-1, 12)));
  const auto evaluated = poly_eval_t(p * p * t + t, 3);
  const auto dt = evaluated.degree_in(Var::t);
  EXPECT_TRUE(!dt || *dt == 0);
}

TEST(PolyPT, DegreeExamples) {
  EXPECT_EQ(degree_in(t * t - t + PolyPT(Rational(1, 3)), Var::t), 2u);
  EXPECT_EQ(degree_in(PolyPT(), Var::t), std::nullopt);
  EXPECT_EQ(degree_in(PolyPT(), Var::p), std::nullopt);
  const PolyPT g2 = parse_poly("1/24*p*(-2+3*p+12*t-12*p*t-12*t^2+12*p*t^2)");
  EXPECT_EQ(degree_in(g2, Var::p), 2u);
  EXPECT_EQ(degree_in(g2, Var::t), 2u);
}

TEST(PolyPT, ShiftDerivativeAndCoefficients) {
  const PolyPT a = parse_poly("p^2*t^3 - 2*t + 5");
  EXPECT_EQ(a.shift_t(1), parse_poly("p^2*(t+1)^3 - 2*(t+1) + 5"));
  EXPECT_EQ(a.derivative_t(), parse_poly("3*p^2*t^2 - 2"));
  EXPECT_EQ(a.t_coefficient(3), p * p);
  EXPECT_EQ(a.t_coefficient(0), PolyPT(5));
  EXPECT_EQ(a.eval_p(2), parse_poly("4*t^3 - 2*t + 5"));
}

TEST(PolyPT, ToUnivariateRejectsOtherVariable) {
  EXPECT_THROW(parse_poly("p*t").to_univariate(Var::t), std::logic_error);
  EXPECT_EQ(parse_poly("3*t^2+1").to_univariate(Var::t), PolyT(std::vector<Rational>{1, 0, 3}));
}

TEST(PolyPT, PrintsHighestFirst) {
  EXPECT_EQ(parse_poly("-1/12*p + 1/2*p^2*t").to_string(), "1/2*p^2*t - 1/12*p");
  EXPECT_EQ(PolyPT().to_string(), "0");
  EXPECT_EQ(parse_poly("p/24").to_latex(), "\\tfrac{1}{24}p");
  EXPECT_EQ(parse_poly("t^2 - t + 1/3").to_latex(), "t^{2}-t+\\tfrac{1}{3}");
}

TEST(Parse, GrammarAndErrors) {
  EXPECT_EQ(parse_poly(" ( 2*t - 1 ) / 90 "), parse_poly("1/45*t - 1/90"));
  EXPECT_EQ(parse_poly("-(p-2)^2"), parse_poly("-p^2 + 4*p - 4"));
  EXPECT_EQ(parse_poly("--t"), t);
  for (const char* bad : {"", "t+", "(t", "t/p", "t/0", "x", "2t", "201*t^2/35840+9*t/640=9/640", "t^"})
    EXPECT_THROW(parse_poly(bad), std::invalid_argument) << bad;
}

TEST(Serialize, ExactJsonLayout) {
  const PolyPT a = parse_poly("p*t - 1/2*p + 3");
  EXPECT_EQ(polypt_to_json(a),
            R"({"terms":[{"den":"1","num":"3","p":0,"t":0},{"den":"2","num":"-1","p":1,"t":0},)"
            R"({"den":"1","num":"1","p":1,"t":1}],"var_order":["p","t"]})");
  EXPECT_EQ(polypt_to_json(PolyPT()), R"({"terms":[],"var_order":["p","t"]})");
}

TEST(Serialize, RejectsNonCanonicalInput) {
  EXPECT_THROW(polypt_from_json(R"({"var_order":["t","p"],"terms":[]})"), std::invalid_argument);
  EXPECT_THROW(polypt_from_json(R"({"var_order":["p","t"],"terms":[{"p":0,"t":0,"num":"0","den":"1"}]})"),
               std::invalid_argument);
  EXPECT_THROW(polypt_from_json(R"({"var_order":["p","t"],"terms":[{"p":1,"t":0,"num":"1","den":"1"},)"
                                R"({"p":0,"t":0,"num":"1","den":"1"}]})"),
               std::invalid_argument);
  EXPECT_THROW(polypt_from_json(R"({"var_order":["p","t"],"terms":[{"p":0,"t":0,"num":1,"den":"1"}]})"),
               std::invalid_argument);
  EXPECT_THROW(polypt_from_json("{"), std::invalid_argument);
}

// Property tests over small random polynomials.
class RingProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240917};
};

TEST_F(RingProperties, AxiomsHoldExactly) {
  for (int i = 0; i < 200; ++i) {
    const PolyPT a = random_polypt(rng), b = random_polypt(rng), c = random_polypt(rng);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * PolyPT(1), a);
  }
}

TEST_F(RingProperties, EvalCommutesWithMul) {
  for (int i = 0; i < 200; ++i) {
    const PolyPT a = random_polypt(rng), b = random_polypt(rng);
    const Rational t0 = random_rational(rng);
    ASSERT_EQ(poly_eval_t(a * b, t0), poly_eval_t(a, t0) * poly_eval_t(b, t0));
    ASSERT_EQ(a.eval_p(t0).eval_t(t0 + 1), a.eval_t(t0 + 1).eval_p(t0));
  }
}

TEST_F(RingProperties, CanonicalFormHasNoStoredZeros) {
  for (int i = 0; i < 200; ++i) {
    const PolyPT a = random_polypt(rng) * random_polypt(rng) - random_polypt(rng);
    for (const auto& [e, c] : a.terms()) ASSERT_FALSE(c.is_zero());
  }
}

TEST_F(RingProperties, SerializeParseSerializeIsIdentity) {
  for (int i = 0; i < 200; ++i) {
    const PolyPT a = random_polypt(rng, 6, 10);
    const std::string once = polypt_to_json(a);
    const PolyPT back = polypt_from_json(once);
    ASSERT_EQ(back, a);
    ASSERT_EQ(polypt_to_json(back), once);
  }
}

TEST_F(RingProperties, ParserRoundTripsPrintedForm) {
  for (int i = 0; i < 200; ++i) {
    const PolyPT a = random_polypt(rng, 5, 8);
    ASSERT_EQ(parse_poly(a.to_string()), a) << a.to_string();
  }
}

}  // namespace
}  // namespace psiexp
