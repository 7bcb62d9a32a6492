#include "test_util.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"
#include "qsym/verma.hpp"

using namespace qsym;
using qsym::test::C;
using qsym::test::Near;
using qsym::test::QTest;

namespace {

class VermaTest : public QTest {
 protected:
  Weight l1 = C("5.41"), l2 = C("6.83"), l3 = C("4.27");
};

TEST_F(VermaTest, PrimalAction) {
  TruncatedModule m{C("3"), 4};
  EXPECT_FALSE(act(ctx(), m, false, Generator::E, 0));
  auto e1 = act(ctx(), m, false, Generator::E, 1);
  ASSERT_TRUE(e1);
  EXPECT_EQ(e1->k, 0);
  EXPECT_TRUE(Near(e1->coeff, C("1"), tol()));
  auto f0 = act(ctx(), m, false, Generator::F, 0);
  ASSERT_TRUE(f0);
  EXPECT_EQ(f0->k, 1);
  EXPECT_TRUE(Near(f0->coeff, qnum(ctx(), 6L), tol()));
  auto k2 = act(ctx(), m, false, Generator::K, 2);
  EXPECT_TRUE(Near(k2->coeff, C("4"), tol()));  // q^{2(3-2)}
  EXPECT_FALSE(act(ctx(), m, false, Generator::F, 4));  // leaves the truncation
  EXPECT_THROW(act(ctx(), m, false, Generator::E, 5), DomainError);
}

TEST_F(VermaTest, DualActionOnFirstVector) {
  TruncatedModule m{C("3"), 4};
  auto e1 = act(ctx(), m, true, Generator::E, 1);
  ASSERT_TRUE(e1);
  EXPECT_EQ(e1->k, 0);
  // -q^{2(lambda-1)} [2 lambda] at q = 2, lambda = 3.
  EXPECT_TRUE(Near(e1->coeff, C("-16") * qnum(ctx(), 6L), tol()));
}

TEST_F(VermaTest, ShapovalovDiagonal) {
  EXPECT_TRUE(Near(alpha(ctx(), l1, 0), C("1"), tol()));
  Complex want = -(ctx().qpow(Complex(2) * (Complex(1) - l1)) / qnum(ctx(), Complex(2) * l1));
  EXPECT_TRUE(Near(alpha(ctx(), l1, 1), want, tol()));
  EXPECT_TRUE(Near(shapovalov(ctx(), l1, 0, 0), C("1"), tol()));
  EXPECT_EQ(shapovalov(ctx(), l1, 1, 2), C("0"));
  EXPECT_EQ(shapovalov(ctx(), l1, 2, 2), alpha(ctx(), l1, 2));
  EXPECT_THROW(alpha(ctx(), l1, -1), DomainError);
}

TEST_F(VermaTest, AlphaRecursion) {
  EXPECT_LT(check_alpha_recursion(ctx(), l1, 8).rel_err, tol());
  EXPECT_LT(check_alpha_recursion(ctx(), C("4.2", "0.25"), 8).rel_err, tol());
}

TEST_F(VermaTest, ModuleRelationsHold) {
  for (bool dual : {false, true}) {
    Residual r = check_module_relations(ctx(), TruncatedModule{l2, 6}, dual);
    EXPECT_GT(r.entries, 0);
    EXPECT_LT(r.rel_err, tol()) << r.where;
  }
}

TEST_F(VermaTest, ContravarianceAndShapovalovMap) {
  EXPECT_LT(check_shapovalov_contravariance(ctx(), l3, 6).rel_err, tol());
  EXPECT_LT(check_phi_intertwining(ctx(), l3, 6).rel_err, tol());
}

TEST_F(VermaTest, RMatrixElements) {
  Weight w = C("3");
  // n = 0: q^{2 a1 a2} with a1 = 3 - 2, a2 = 3 - 1.
  EXPECT_TRUE(Near(rmat_elem(ctx(), w, w, 2, 1, 0), ctx().qpow(C("4")), tol()));
  EXPECT_EQ(rmat_elem(ctx(), w, w, 2, 1, 3), C("0"));
  Complex want = ctx().qpow(12L) * C("1.5") * qnum(ctx(), 6L);
  EXPECT_TRUE(Near(rmat_elem(ctx(), w, w, 1, 0, 1), want, tol()));
  EXPECT_TRUE(Near(rmat_inv_elem(ctx(), w, w, 2, 1, 0), ctx().qpow(C("-4")), tol()));
  EXPECT_EQ(rmat_inv_elem(ctx(), w, w, 2, 1, 3), C("0"));
  EXPECT_THROW(rmat_elem(ctx(), w, w, 1, 0, -1), DomainError);
}

TEST_F(VermaTest, RMatrixInverse) {
  Residual r = check_rmat_inverse(ctx(), l1, l2, 5);
  EXPECT_GT(r.entries, 0);
  EXPECT_LT(r.rel_err, tol()) << r.where;
}

TEST_F(VermaTest, CoproductOnTopVectors) {
  TensorVector v;
  v.legs = {TruncatedModule{l1, 3}, TruncatedModule{l2, 3}};
  v.add({0, 0}, C("1"));
  EXPECT_TRUE(apply_coproduct(ctx(), Generator::E, v).coeffs.empty());

  TensorVector f = apply_coproduct(ctx(), Generator::F, v);
  ASSERT_EQ(f.coeffs.size(), 2u);
  EXPECT_TRUE(Near(f.coeffs.at({1, 0}), qnum(ctx(), Complex(2) * l1), tol()));
  EXPECT_TRUE(Near(f.coeffs.at({0, 1}),
                   ctx().qpow(Complex(-2) * l1) * qnum(ctx(), Complex(2) * l2), tol()));

  TensorVector w;
  w.legs = v.legs;
  w.add({2, 1}, C("1"));
  TensorVector k = apply_coproduct(ctx(), Generator::K, w);
  Complex a1 = l1 - Complex(2), a2 = l2 - Complex(1);
  EXPECT_TRUE(Near(k.coeffs.at({2, 1}), ctx().qpow(Complex(2) * (a1 + a2)), tol()));
}

TEST_F(VermaTest, YangBaxterOnModules) {
  for (int depth : {0, 1, 3}) {
    Residual r = check_yang_baxter_modules(ctx(), l1, l2, l3, depth);
    EXPECT_GT(r.entries, 0);
    EXPECT_LT(r.rel_err, tol()) << "depth " << depth << " at " << r.where;
  }
}

class VermaOtherQ : public QTest {
 protected:
  VermaOtherQ() : QTest("1.3") {}
};

TEST_F(VermaOtherQ, RelationsWithComplexWeight) {
  Weight w = C("5.1", "0.2");
  EXPECT_LT(check_module_relations(ctx(), TruncatedModule{w, 5}, true).rel_err, tol());
  EXPECT_LT(check_rmat_inverse(ctx(), w, C("4.6", "-0.1"), 3).rel_err, tol());
}

}  // namespace
