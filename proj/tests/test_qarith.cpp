#include "test_util.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"

using namespace qsym;
using qsym::test::C;
using qsym::test::Near;
using qsym::test::QTest;

namespace {

class QArithTest : public QTest {};

TEST_F(QArithTest, ContextDefaults) {
  EXPECT_EQ(ctx().precision_digits(), 64);
  EXPECT_TRUE(Near(Complex(ctx().rel_tolerance()), C("1e-32"), Real("1e-40")));
  EXPECT_TRUE(Near(Complex(ctx().poch_tail_eps() * Real("1e64")), C("1"), Real("1e-40")));
  EXPECT_EQ(ctx().poch_max_terms(), 40 * 64);
}

TEST_F(QArithTest, ContextRejectsBadInput) {
  EXPECT_THROW(QContext(C("1"), 64), DomainError);
  EXPECT_THROW(QContext(C("-1"), 64), DomainError);
  EXPECT_THROW(QContext(C("0"), 64), DomainError);
  EXPECT_THROW(QContext(C("2"), 8), DomainError);
  // q = i: [2] = q + 1/q = 0, a root of unity.
  EXPECT_THROW(QContext(C("0", "1"), 64), NonGenericError);
}

TEST_F(QArithTest, QuantumNumbers) {
  EXPECT_TRUE(Near(qnum(ctx(), Complex(0)), C("0"), tol()));
  EXPECT_TRUE(Near(qnum(ctx(), Complex(1)), C("1"), tol()));
  EXPECT_TRUE(Near(qnum(ctx(), C("3")), C("5.25"), tol()));
  EXPECT_TRUE(Near(qnum(ctx(), 3L), C("5.25"), tol()));
  EXPECT_TRUE(Near(qnum(ctx(), -3L), C("-5.25"), tol()));
  // Non-integer argument against the defining quotient.
  Complex x = C("2.5", "0.3");
  Complex want = (ctx().qpow(x) - ctx().qpow(-x)) / (C("2") - C("0.5"));
  EXPECT_TRUE(Near(qnum(ctx(), x), want, tol()));
}

TEST_F(QArithTest, QuantumNumberRun) {
  Complex x = C("4.41", "0.1");
  auto run = qnum_run(ctx(), x, 6);
  ASSERT_EQ(run.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(Near(run[i], qnum(ctx(), x + Complex(i)), tol()));
}

TEST_F(QArithTest, Factorials) {
  EXPECT_TRUE(Near(qfact(ctx(), 0), C("1"), tol()));
  EXPECT_TRUE(Near(qfact(ctx(), 1), C("1"), tol()));
  EXPECT_TRUE(Near(qfact(ctx(), 3), C("13.125"), tol()));
  EXPECT_THROW(qfact(ctx(), -1), DomainError);
  EXPECT_EQ(inv_qfact_reg(ctx(), -1), C("0"));
  EXPECT_TRUE(Near(inv_qfact_reg(ctx(), 0), C("1"), tol()));
  EXPECT_TRUE(Near(inv_qfact_reg(ctx(), 2), C("0.4"), tol()));
  // Beyond the cache.
  EXPECT_TRUE(Near(qfact(ctx(), 60) * inv_qfact_reg(ctx(), 60), C("1"), tol()));
  EXPECT_TRUE(Near(qfact(ctx(), 50), qfact(ctx(), 49) * qnum(ctx(), 50L), tol()));
}

TEST_F(QArithTest, Binomials) {
  EXPECT_TRUE(Near(qbinom(ctx(), 7, 0), C("1"), tol()));
  EXPECT_TRUE(Near(qbinom(ctx(), 7, 7), C("1"), tol()));
  EXPECT_TRUE(Near(qbinom(ctx(), 4, 2), C("22.3125"), tol()));
  EXPECT_EQ(qbinom(ctx(), 4, 5), C("0"));
  EXPECT_EQ(qbinom(ctx(), 4, -1), C("0"));
}

TEST_F(QArithTest, BracketPairs) {
  EXPECT_TRUE(Near(qpair(ctx(), C("3.7"), 0), C("1"), tol()));
  EXPECT_TRUE(Near(qpair(ctx(), C("1"), 2), C("13.125"), tol()));
  Complex b = C("2.37", "-0.4");
  for (int d = -3; d <= 3; ++d)
    EXPECT_TRUE(Near(qpair(ctx(), b, d) * qpair(ctx(), b + Complex(d), -d), C("1"), tol()))
        << "d=" << d;
  // Inverting a vanishing factor is non-generic.
  EXPECT_THROW(qpair(ctx(), C("1"), -2), NonGenericError);
}

TEST_F(QArithTest, FallingAndRisingProducts) {
  Complex x = C("5.2", "0.1");
  EXPECT_TRUE(Near(qfalling(ctx(), x, 3),
                   qnum(ctx(), x) * qnum(ctx(), x - Complex(1)) * qnum(ctx(), x - Complex(2)),
                   tol()));
  EXPECT_TRUE(Near(qrising(ctx(), x, 2), qnum(ctx(), x) * qnum(ctx(), x + Complex(1)), tol()));
  EXPECT_TRUE(Near(qfalling(ctx(), x, -2) * qfalling(ctx(), x + Complex(2), 2), C("1"), tol()));
  EXPECT_THROW(qfalling_checked(ctx(), C("2"), 4, "test"), NonGenericError);
}

TEST_F(QArithTest, FinitePochhammer) {
  EXPECT_TRUE(Near(poch(ctx(), C("0.3"), C("0.7"), 0), C("1"), tol()));
  EXPECT_EQ(poch(ctx(), C("1"), C("0.7"), 3), C("0"));
  EXPECT_TRUE(Near(poch(ctx(), C("0.5"), C("0.5"), 2), C("0.375"), tol()));
  EXPECT_THROW(poch(ctx(), C("0.5"), C("0.5"), -1), DomainError);
}

TEST_F(QArithTest, InfinitePochhammer) {
  EXPECT_TRUE(Near(poch_inf(ctx(), C("0"), C("0.5")), C("1"), tol()));
  Complex direct(1);
  Complex t = C("0.5");
  for (int j = 0; j < 240; ++j) {
    direct *= Complex(1) - t;
    t *= C("0.5");
  }
  EXPECT_TRUE(Near(poch_inf(ctx(), C("0.5"), C("0.5")), direct, Real("1e-62")));
  EXPECT_THROW(poch_inf(ctx(), C("0.5"), C("1")), DomainError);
}

TEST_F(QArithTest, InfiniteProductSplitsAtAnyLength) {
  const Real bound = Real(10) * ctx().poch_tail_eps();
  Complex a = C("0.8", "-1.3"), b = C("-0.5", "0.7");  // |b| < 0.9
  Complex full = poch_inf(ctx(), a, b);
  Complex bn(1);
  for (int n = 0; n <= 8; ++n) {
    Complex lhs = poch(ctx(), a, b, n) * poch_inf(ctx(), a * bn, b);
    EXPECT_LT(abs(lhs - full) / abs(full), bound) << "n=" << n;
    bn *= b;
  }
}

TEST_F(QArithTest, BasicHypergeometric) {
  Complex a = C("1.7", "0.2"), b = C("2.1", "-0.5"), c = C("0.4", "0.3"), base = C("0.45", "0.2");
  EXPECT_TRUE(Near(phi21(ctx(), a, b, c, base, C("0")), C("1"), tol()));

  // Terminating after two terms when a = 1/base.
  Complex z = C("0.3", "0.1");
  Complex inv = reciprocal(base);
  Complex want = Complex(1) + (Complex(1) - inv) * (Complex(1) - b) /
                                  ((Complex(1) - base) * (Complex(1) - c)) * z;
  EXPECT_TRUE(Near(phi21(ctx(), inv, b, c, base, z), want, tol()));
  EXPECT_TRUE(Near(phi21_terminating(ctx(), 1, b, c, base, z), want, tol()));

  // Summation at z = c/(ab).
  Complex zz = c / (a * b);
  Complex lhs = phi21(ctx(), a, b, c, base, zz);
  Complex rhs = poch_inf(ctx(), c / a, base) * poch_inf(ctx(), c / b, base) /
                (poch_inf(ctx(), c, base) * poch_inf(ctx(), zz, base));
  EXPECT_LT(abs(lhs - rhs) / abs(rhs), Real(100) * ctx().poch_tail_eps());
}

TEST_F(QArithTest, DivergentSeriesReportsConvergenceFailure) {
  EXPECT_THROW(phi21(ctx(), C("0.5"), C("0.6"), C("0.2"), C("0.5"), C("3")), ConvergenceError);
}

class QArithSmallQ : public QTest {
 protected:
  QArithSmallQ() : QTest("0.5") {}
};

TEST_F(QArithSmallQ, InvariantUnderInversion) {
  QContext inv = ctx().inverted();
  EXPECT_TRUE(Near(inv.q(), C("2"), tol()));
  for (int n = 0; n < 6; ++n) EXPECT_TRUE(Near(qnum(ctx(), static_cast<long>(n)), qnum(inv, static_cast<long>(n)), tol()));
}

}  // namespace
