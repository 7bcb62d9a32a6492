#include "test_util.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"
#include "qsym/q3j.hpp"

using namespace qsym;
using qsym::test::C;
using qsym::test::Near;
using qsym::test::QTest;

namespace {

class Q3jTest : public QTest {
 protected:
  Q3jTest() : QTest("1.37") {}
  Weight l1 = C("5.41"), l2 = C("6.83"), l3 = C("4.27");

  CGKey key(int J, int k1, int k2, CGVariant v = CGVariant::Psi) const {
    return CGKey{l1, l2, J, k1, k2, v};
  }
};

TEST_F(Q3jTest, DdNormalization) {
  EXPECT_TRUE(Near(dd(ctx(), l1, l2, 0), C("1"), tol()));
  for (int J = 1; J <= 5; ++J) {
    Complex d = dd(ctx(), l1, l2, J);
    EXPECT_GT(d.real(), 0);
    EXPECT_EQ(d.imag(), 0);
    Complex lambda = l1 + l2 - Complex(J);
    Complex radicand = qfact(ctx(), J) * qfalling(ctx(), Complex(2) * l1, J) *
                       qfalling(ctx(), Complex(2) * l2, J) /
                       qfalling(ctx(), Complex(2) * lambda + Complex(J + 1), J);
    EXPECT_TRUE(Near(d * d, radicand, tol())) << "J=" << J;
  }
}

TEST_F(Q3jTest, HighestWeightSymbols) {
  EXPECT_TRUE(Near(q3j_hw(ctx(), l1, l2, 0, 0), C("1"), tol()));
  for (int J = 0; J <= 6; ++J) {
    Complex s;
    for (int k = 0; k <= J; ++k) {
      Complex c = q3j_hw(ctx(), l1, l2, J, k);
      s += c * c * alpha(ctx(), l1, k) * alpha(ctx(), l2, J - k);
    }
    EXPECT_TRUE(Near(s, C("1"), tol())) << "J=" << J;
  }
}

TEST_F(Q3jTest, RacahFockReducesToHighestWeight) {
  for (int J = 0; J <= 4; ++J)
    for (int k = 0; k <= J; ++k)
      EXPECT_TRUE(Near(q3j_rf(ctx(), key(J, k, J - k)), q3j_hw(ctx(), l1, l2, J, k), tol()));
}

TEST_F(Q3jTest, InadmissibleKeysVanish) {
  EXPECT_EQ(q3j_rf(ctx(), key(3, 1, 1)), C("0"));
  EXPECT_EQ(q3j_vdw(ctx(), key(3, 1, 1)), C("0"));
  EXPECT_EQ(q3j(ctx(), key(3, 0, 2, CGVariant::Pi)), C("0"));
  EXPECT_TRUE(Near(q3j_vdw(ctx(), key(0, 0, 0)), C("1"), tol()));
  EXPECT_TRUE(Near(q3j_pi(ctx(), key(0, 0, 0, CGVariant::Pi)), C("1"), tol()));
}

TEST_F(Q3jTest, ThreeFormulasAgree) {
  RecursionTable table(ctx(), l1, l2, 3, 4);
  for (int J = 0; J <= 4; ++J)
    for (int k1 = 0; k1 <= J + 5; ++k1)
      for (int k2 = 0; k1 + k2 <= J + 5; ++k2) {
        CGKey k = key(J, k1, k2);
        if (k.n() < 0) continue;
        Complex rf = q3j_rf(ctx(), k);
        EXPECT_TRUE(Near(q3j_vdw(ctx(), k), rf, tol())) << J << " " << k1 << " " << k2;
        EXPECT_TRUE(Near(q3j_rec_oracle(ctx(), k), rf, tol())) << J << " " << k1 << " " << k2;
      }
  EXPECT_EQ(table.max_n(), 4);
  EXPECT_TRUE(Near(table.at(3, 2), q3j_rf(ctx(), key(3, 3, 2)), tol()));
  EXPECT_THROW(table.at(6, 3), DomainError);
}

TEST_F(Q3jTest, SingleSurvivingTermAtTopOfSecondLeg) {
  // k2 = 0 leaves one term of the Racah-Fock sum; compare with the recursion.
  for (int J = 0; J <= 3; ++J)
    for (int k1 = J; k1 <= J + 4; ++k1)
      EXPECT_TRUE(Near(q3j_rf(ctx(), key(J, k1, 0)), q3j_rec_oracle(ctx(), key(J, k1, 0)), tol()));
}

TEST_F(Q3jTest, ProjectionIsAlphaRatioTimesEmbedding) {
  for (int J = 0; J <= 3; ++J)
    for (int k1 = 0; k1 <= 4; ++k1)
      for (int k2 = 0; k2 <= 4; ++k2) {
        CGKey k = key(J, k1, k2);
        if (k.n() < 0) continue;
        Complex ratio =
            alpha(ctx(), l1, k1) * alpha(ctx(), l2, k2) / alpha(ctx(), k.lambda(), k.n());
        EXPECT_TRUE(Near(q3j_pi(ctx(), key(J, k1, k2, CGVariant::Pi)), ratio * q3j_rf(ctx(), k),
                         tol()));
      }
}

TEST_F(Q3jTest, FamilyCacheMatchesDirectEvaluation) {
  CGFamily fam(ctx(), l1, l2, 2);
  EXPECT_TRUE(Near(fam.psi(3, 1), q3j_rf(ctx(), key(2, 3, 1)), tol()));
  EXPECT_TRUE(Near(fam.pi(2, 2), q3j_pi(ctx(), key(2, 2, 2, CGVariant::Pi)), tol()));
  EXPECT_EQ(fam.psi(0, 1), C("0"));
}

TEST_F(Q3jTest, OrthogonalityEntries) {
  // Off-diagonal defects pair to zero, diagonal ones to one.
  Complex same, other;
  for (int k1 = 0; k1 <= 2; ++k1) {
    same += q3j_pi(ctx(), key(2, k1, 2 - k1, CGVariant::Pi)) * q3j_rf(ctx(), key(2, k1, 2 - k1));
    other += q3j_pi(ctx(), key(1, k1, 2 - k1, CGVariant::Pi)) * q3j_rf(ctx(), key(2, k1, 2 - k1));
  }
  EXPECT_TRUE(Near(same, C("1"), tol()));
  EXPECT_LT(abs(other), tol());
}

struct IdentityCase {
  Q3jIdentity which;
  int max_J;
  int max_n;
};

class Q3jIdentityTest : public Q3jTest, public ::testing::WithParamInterface<IdentityCase> {};

TEST_P(Q3jIdentityTest, HoldsOnGenericWeights) {
  const IdentityCase& c = GetParam();
  Q3jCheckParams p;
  p.l1 = l1;
  p.l2 = l2;
  p.l3 = l3;
  p.max_J = c.max_J;
  p.max_n = c.max_n;
  p.max_depth = 5;
  p.window = 4;
  Residual r = verify_q3j_identity(ctx(), c.which, p);
  EXPECT_GT(r.entries, 0);
  EXPECT_LT(r.rel_err, tol()) << q3j_identity_name(c.which) << " at " << r.where;
}

INSTANTIATE_TEST_SUITE_P(
    AllIdentities, Q3jIdentityTest,
    ::testing::Values(IdentityCase{Q3jIdentity::RfVdw, 4, 5}, IdentityCase{Q3jIdentity::RfRec, 4, 5},
                      IdentityCase{Q3jIdentity::NormHw, 4, 5}, IdentityCase{Q3jIdentity::Orth1, 3, 5},
                      IdentityCase{Q3jIdentity::Orth2, 3, 5}, IdentityCase{Q3jIdentity::Rmat1, 3, 3},
                      IdentityCase{Q3jIdentity::Rmat2, 2, 2}, IdentityCase{Q3jIdentity::Sym, 3, 3},
                      IdentityCase{Q3jIdentity::Intertwine, 2, 4}),
    [](const ::testing::TestParamInfo<IdentityCase>& info) {
      std::string name = q3j_identity_name(info.param.which);
      for (char& ch : name)
        if (ch == '-') ch = '_';
      return name;
    });

TEST_F(Q3jTest, ComplexWeightsStillSatisfyFormulaEquivalence) {
  Q3jCheckParams p;
  p.l1 = C("5.2", "0.2");
  p.l2 = C("4.9", "-0.15");
  p.max_J = 3;
  p.max_n = 4;
  EXPECT_LT(verify_q3j_identity(ctx(), Q3jIdentity::RfVdw, p).rel_err, tol());
  EXPECT_LT(verify_q3j_identity(ctx(), Q3jIdentity::RfRec, p).rel_err, tol());
}

}  // namespace
