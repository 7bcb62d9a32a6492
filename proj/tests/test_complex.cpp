#include "test_util.hpp"

#include "qsym/errors.hpp"

using namespace qsym;
using qsym::test::C;
using qsym::test::Near;

namespace {

class ComplexTest : public ::testing::Test {
 protected:
  PrecisionScope scope{50};
  Real tol{"1e-45"};
};

TEST_F(ComplexTest, ArithmeticMatchesHandComputation) {
  Complex a = C("1.5", "2"), b = C("-0.5", "3");
  EXPECT_TRUE(Near(a + b, C("1", "5"), tol));
  EXPECT_TRUE(Near(a - b, C("2", "-1"), tol));
  EXPECT_TRUE(Near(a * b, C("-6.75", "3.5"), tol));
  EXPECT_TRUE(Near((a * b) / b, a, tol));
  EXPECT_TRUE(Near(reciprocal(C("0", "2")), C("0", "-0.5"), tol));
  EXPECT_EQ(abs(C("3", "4")), Real(5));
  EXPECT_EQ(norm(C("3", "4")), Real(25));
  EXPECT_TRUE(Near(conj(a), C("1.5", "-2"), tol));
}

TEST_F(ComplexTest, ExpLogSqrtPrincipalBranch) {
  Complex z = C("-4");
  EXPECT_TRUE(Near(sqrt(z), C("0", "2"), tol));
  EXPECT_TRUE(Near(sqrt(C("0", "-2")), C("1", "-1"), tol));
  Complex w = C("0.3", "-2.7");
  EXPECT_TRUE(Near(exp(log(w)), w, tol));
  Complex l = log(C("-1"));
  EXPECT_TRUE(Near(l, Complex(Real(0), boost::math::constants::pi<Real>()), tol));
  Complex s = sqrt(w);
  EXPECT_TRUE(Near(s * s, w, tol));
  EXPECT_GE(s.real(), 0);
}

TEST_F(ComplexTest, SignPowAndIPow) {
  const Real pi = boost::math::constants::pi<Real>();
  EXPECT_TRUE(Near(sign_pow(C("3"), pi), C("-1"), tol));
  EXPECT_TRUE(Near(sign_pow(C("0.5"), pi), C("0", "1"), tol));
  EXPECT_EQ(i_pow(0), C("1"));
  EXPECT_EQ(i_pow(1), C("0", "1"));
  EXPECT_EQ(i_pow(2), C("-1"));
  EXPECT_EQ(i_pow(-1), C("0", "-1"));
  EXPECT_EQ(i_pow(7), C("0", "-1"));
}

TEST_F(ComplexTest, ParsesDecimalLiterals) {
  EXPECT_EQ(parse_complex("5.3"), C("5.3"));
  EXPECT_EQ(parse_complex("-2e-3"), C("-2e-3"));
  EXPECT_EQ(parse_complex("5.3+0.2i"), C("5.3", "0.2"));
  EXPECT_EQ(parse_complex("0.5-1i"), C("0.5", "-1"));
  EXPECT_EQ(parse_complex("2i"), C("0", "2"));
  EXPECT_EQ(parse_complex("i"), C("0", "1"));
  EXPECT_EQ(parse_complex("-i"), C("0", "-1"));
  EXPECT_THROW(parse_complex("abc"), DomainError);
  EXPECT_THROW(parse_complex(""), DomainError);
}

TEST_F(ComplexTest, ParsingKeepsFullPrecision) {
  // 0.1 is not a double; the parsed value must agree with the exact decimal far past 17 digits.
  Complex x = parse_complex("0.1");
  EXPECT_LT(abs(x * Complex(10) - Complex(1)), Real("1e-45"));
}

TEST_F(ComplexTest, FormatsBothParts) {
  EXPECT_EQ(to_string(C("1.25", "-2"), 10).find("1.25"), 0u);
  std::string s = to_string(C("1", "0"), 10);
  EXPECT_EQ(s.rfind("1", 0), 0u);
  EXPECT_NE(s.find('i'), std::string::npos);
}

TEST(PrecisionScopeTest, RestoresPreviousDigits) {
  PrecisionScope outer(40);
  EXPECT_EQ(current_precision_digits(), 40);
  {
    PrecisionScope inner(90);
    EXPECT_EQ(current_precision_digits(), 90);
  }
  EXPECT_EQ(current_precision_digits(), 40);
}

TEST(PrecisionScopeTest, SetPrecisionRerounds) {
  PrecisionScope outer(60);
  Complex third = Complex(1) / Complex(3);
  Complex coarse = third;
  coarse.set_precision(20);
  EXPECT_GT(abs(coarse - third), Real("1e-40"));
  EXPECT_LT(abs(coarse - third), Real("1e-19"));
}

}  // namespace
