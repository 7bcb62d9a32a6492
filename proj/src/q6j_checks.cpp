#include "qsym/errors.hpp"
#include "qsym/q3j.hpp"
#include "qsym/q6j.hpp"
#include "qsym/qarith.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

namespace qsym {

const char* q6j_identity_name(Q6jIdentity which) {
  switch (which) {
    case Q6jIdentity::ClosedOracle: return "Q6J-ORACLE";
    case Q6jIdentity::Stid1: return "STID1";
    case Q6jIdentity::Stid2: return "STID2";
    case Q6jIdentity::Stid3: return "STID3";
    case Q6jIdentity::QsOrth: return "QSORTH";
    case Q6jIdentity::QsRacah: return "QSRACAH";
    case Q6jIdentity::QsBE: return "QSBE";
    case Q6jIdentity::QsYB: return "QSYB";
    case Q6jIdentity::Lemma2: return "LEMMA2";
    case Q6jIdentity::Lemma3: return "LEMMA3";
    case Q6jIdentity::Lemma5: return "LEMMA5";
    case Q6jIdentity::Lemma6: return "LEMMA6";
    case Q6jIdentity::Lemma7: return "LEMMA7";
  }
  return "?";
}

namespace {

template <class... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// 6j symbol with defects outside the decomposition read as 0.
Complex s6(const QContext& ctx, const Weight& a, const Weight& b, const Weight& c, int J12, int J23,
           int K) {
  SixJKey key{a, b, c, J12, J23, K};
  return key.valid() ? q6j_closed(ctx, key) : Complex();
}

// (-1)^x q^{x(x+1)}-style phases use exp(i pi x) for complex x.
Complex sgn(const QContext& ctx, const Complex& x) { return sign_pow(x, ctx.pi()); }

Complex cas(const Complex& x) { return x * (x + Complex(1)); }

// Accumulates a sum while tracking its largest summand.
struct Sum {
  Complex value;
  Real scale = 0;
  void add(const Complex& t) {
    value += t;
    Real a = abs(t);
    if (a > scale) scale = a;
  }
};

// Lazily built embedding-symbol families keyed by a caller-chosen tag.
class Families {
 public:
  explicit Families(const QContext& ctx) : ctx_(ctx) {}
  // `kind` names the weight pair, `param` the defect it depends on.
  CGFamily& get(int kind, int param, const Weight& a, const Weight& b, int J) {
    auto& slot = map_[{kind, param, J}];
    if (!slot) slot = std::make_unique<CGFamily>(ctx_, a, b, J);
    return *slot;
  }

 private:
  const QContext& ctx_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<CGFamily>> map_;
};

Residual check_closed_oracle(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  for (int K = 0; K <= p.max_defect; ++K)
    for (int J12 = 0; J12 <= K; ++J12)
      for (int J23 = 0; J23 <= K; ++J23) {
        SixJKey key{p.l1, p.l2, p.l3, J12, J23, K};
        res.update(q6j_closed(ctx, key), q6j_contraction_oracle(ctx, key), Real(0),
                   [&] { return describe("J12=", J12, " J23=", J23, " J123=", K); });
      }
  return res;
}

// pi^{l2,l3} contracted with psi^{l12,l3} psi^{l1,l2} equals 6j times psi^{l1,l23}.
Residual check_stid1(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  Families fam(ctx);
  enum { F23, F123, F12, FOUT };
  for (int K = 0; K <= p.max_defect; ++K)
    for (int J12 = 0; J12 <= K; ++J12)
      for (int J23 = 0; J23 <= K; ++J23) {
        const Weight l12 = l1 + l2 - Complex(J12), l23 = l2 + l3 - Complex(J23);
        const Complex six = q6j_closed(ctx, {l1, l2, l3, J12, J23, K});
        CGFamily& f23 = fam.get(F23, 0, l2, l3, J23);
        CGFamily& f123 = fam.get(F123, J12, l12, l3, K - J12);
        CGFamily& f12 = fam.get(F12, 0, l1, l2, J12);
        CGFamily& fout = fam.get(FOUT, J23, l1, l23, K - J23);
        for (int k1 = 0; k1 <= p.stid_depth; ++k1)
          for (int k23 = 0; k23 <= p.stid_depth; ++k23) {
            if (k1 + k23 < K - J23) continue;
            Sum lhs;
            for (int k2 = 0; k2 <= J23 + k23; ++k2) {
              const int k3 = J23 + k23 - k2, k12 = k1 + k2 - J12;
              if (k12 < 0) continue;
              lhs.add(f23.pi(k2, k3) * f123.psi(k12, k3) * f12.psi(k1, k2));
            }
            res.update(lhs.value, six * fout.psi(k1, k23), lhs.scale, [&] {
              return describe("J12=", J12, " J23=", J23, " J123=", K, " k1=", k1, " k23=", k23);
            });
          }
      }
  return res;
}

// psi^{l1,l23} psi^{l2,l3} = sum_{J12} 6j(l3,l2,l1) psi^{l12,l3} psi^{l1,l2}, entrywise.
Residual check_stid2(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  Families fam(ctx);
  for (int K = 0; K <= p.max_defect; ++K)
    for (int J23 = 0; J23 <= K; ++J23) {
      const Weight l23 = l2 + l3 - Complex(J23);
      std::vector<Complex> six(static_cast<size_t>(K) + 1);
      for (int J12 = 0; J12 <= K; ++J12)
        six[static_cast<size_t>(J12)] = q6j_closed(ctx, {l3, l2, l1, J23, J12, K});
      CGFamily& fout = fam.get(0, J23, l1, l23, K - J23);
      CGFamily& f23 = fam.get(1, 0, l2, l3, J23);
      for (int n = 0; n <= p.stid_depth; ++n) {
        const int T = K + n;
        for (int k1 = 0; k1 <= T; ++k1)
          for (int k2 = 0; k2 <= T - k1; ++k2) {
            const int k3 = T - k1 - k2, k23 = k2 + k3 - J23;
            Complex lhs = k23 >= 0 ? fout.psi(k1, k23) * f23.psi(k2, k3) : Complex();
            Sum rhs;
            for (int J12 = 0; J12 <= K; ++J12) {
              const int k12 = k1 + k2 - J12;
              if (k12 < 0) continue;
              const Weight l12 = l1 + l2 - Complex(J12);
              rhs.add(six[static_cast<size_t>(J12)] *
                      fam.get(2, J12, l12, l3, K - J12).psi(k12, k3) *
                      fam.get(3, 0, l1, l2, J12).psi(k1, k2));
            }
            res.update(lhs, rhs.value, rhs.scale, [&] {
              return describe("J23=", J23, " J123=", K, " (k1,k2,k3)=(", k1, ",", k2, ",", k3, ")");
            });
          }
      }
    }
  return res;
}

// R^{l3,l2} on legs (3,2) of psi^{l13,l2} psi^{l1,l3} re-expanded in the (12)3 bracketing.
Residual check_stid3(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  Families fam(ctx);
  for (int K = 0; K <= p.max_defect; ++K) {
    const Weight L = l1 + l2 + l3 - Complex(K);
    for (int J13 = 0; J13 <= K; ++J13) {
      const Weight l13 = l1 + l3 - Complex(J13);
      CGFamily& fa = fam.get(0, J13, l13, l2, K - J13);
      CGFamily& fb = fam.get(1, 0, l1, l3, J13);
      auto X = [&](int k1, int k3, int k2) {
        const int k13 = k1 + k3 - J13;
        if (k13 < 0 || k1 < 0 || k2 < 0 || k3 < 0) return Complex();
        return fa.psi(k13, k2) * fb.psi(k1, k3);
      };
      std::vector<Complex> coef(static_cast<size_t>(K) + 1);
      for (int J12 = 0; J12 <= K; ++J12) {
        const Weight l12 = l1 + l2 - Complex(J12);
        Complex ph = ctx.qpow(cas(L) + cas(l1) - cas(l13) - cas(l12));
        if ((K - J13 - J12) % 2) ph = -ph;
        coef[static_cast<size_t>(J12)] = ph * q6j_closed(ctx, {l3, l1, l2, J13, J12, K});
      }
      for (int n = 0; n <= p.stid_depth; ++n) {
        const int T = K + n;
        for (int k1 = 0; k1 <= T; ++k1)
          for (int k2 = 0; k2 <= T - k1; ++k2) {
            const int k3 = T - k1 - k2;
            Sum lhs;
            for (int m = 0; m <= k2; ++m)
              lhs.add(rmat_elem(ctx, l3, l2, k3 + m, k2 - m, m) * X(k1, k3 + m, k2 - m));
            Sum rhs;
            for (int J12 = 0; J12 <= K; ++J12) {
              const int k12 = k1 + k2 - J12;
              if (k12 < 0) continue;
              const Weight l12 = l1 + l2 - Complex(J12);
              rhs.add(coef[static_cast<size_t>(J12)] *
                      fam.get(2, J12, l12, l3, K - J12).psi(k12, k3) *
                      fam.get(3, 0, l1, l2, J12).psi(k1, k2));
            }
            res.update(lhs.value, rhs.value, std::max(lhs.scale, rhs.scale), [&] {
              return describe("J13=", J13, " J123=", K, " (k1,k2,k3)=(", k1, ",", k2, ",", k3, ")");
            });
          }
      }
    }
  }
  return res;
}

Residual check_qsorth(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  for (int K = 0; K <= p.max_defect; ++K) {
    std::vector<std::vector<Complex>> a(static_cast<size_t>(K) + 1), b(static_cast<size_t>(K) + 1);
    for (int j = 0; j <= K; ++j)
      for (int J = 0; J <= K; ++J) {
        a[static_cast<size_t>(j)].push_back(q6j_closed(ctx, {l1, l2, l3, j, J, K}));
        b[static_cast<size_t>(j)].push_back(q6j_closed(ctx, {l3, l2, l1, J, j, K}));
      }
    for (int mu = 0; mu <= K; ++mu)
      for (int nu = 0; nu <= K; ++nu) {
        Sum s;
        for (int j = 0; j <= K; ++j)
          s.add(a[static_cast<size_t>(j)][static_cast<size_t>(mu)] *
                b[static_cast<size_t>(j)][static_cast<size_t>(nu)]);
        res.update(s.value, Complex(mu == nu ? 1 : 0), std::max(Real(1), s.scale),
                   [&] { return describe("J123=", K, " mu=", mu, " nu=", nu); });
      }
  }
  return res;
}

Residual check_qsracah(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  for (int K = 0; K <= p.max_defect; ++K) {
    const Weight L = l1 + l2 + l3 - Complex(K);
    for (int J13 = 0; J13 <= K; ++J13)
      for (int J23 = 0; J23 <= K; ++J23) {
        const Weight l13 = l1 + l3 - Complex(J13), l23 = l2 + l3 - Complex(J23);
        Sum lhs;
        for (int j = 0; j <= K; ++j) {
          const Weight al = l1 + l2 - Complex(j);
          lhs.add(sgn(ctx, al) * ctx.qpow(-cas(al)) * s6(ctx, l1, l2, l3, j, J23, K) *
                  s6(ctx, l3, l1, l2, J13, j, K));
        }
        Complex rhs = sgn(ctx, l1 + l2 + l3 + L - l13 - l23) *
                      ctx.qpow(cas(l13) + cas(l23) - cas(l1) - cas(l2) - cas(l3) - cas(L)) *
                      s6(ctx, l1, l3, l2, J13, J23, K);
        res.update(lhs.value, rhs, lhs.scale,
                   [&] { return describe("J123=", K, " J13=", J13, " J23=", J23); });
      }
  }
  return res;
}

Residual check_qsbe(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3, &l4 = p.l4;
  for (int J1234 = 0; J1234 <= p.max_defect; ++J1234)
    for (int J123 = 0; J123 <= J1234; ++J123)
      for (int J234 = 0; J234 <= J1234; ++J234)
        for (int J12 = 0; J12 <= J123; ++J12)
          for (int J34 = 0; J34 <= J234; ++J34) {
            if (J12 + J34 > J1234) continue;
            Sum lhs;
            for (int j = 0; j <= std::min(J123, J234); ++j) {
              const Weight al = l2 + l3 - Complex(j);
              lhs.add(s6(ctx, l1, l2, l3, J12, j, J123) *
                      s6(ctx, l1, al, l4, J123 - j, J234 - j, J1234 - j) *
                      s6(ctx, l2, l3, l4, j, J34, J234));
            }
            const Weight l12 = l1 + l2 - Complex(J12), l34 = l3 + l4 - Complex(J34);
            Complex rhs = s6(ctx, l12, l3, l4, J123 - J12, J34, J1234 - J12) *
                          s6(ctx, l1, l2, l34, J12, J234 - J34, J1234 - J34);
            res.update(lhs.value, rhs, lhs.scale, [&] {
              return describe("J1234=", J1234, " J123=", J123, " J234=", J234, " J12=", J12,
                              " J34=", J34);
            });
          }
  return res;
}

Residual check_qsyb(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3, &l4 = p.l4;
  for (int J1234 = 0; J1234 <= p.max_defect; ++J1234)
    for (int J123 = 0; J123 <= J1234; ++J123)
      for (int J124 = 0; J124 <= J1234; ++J124)
        for (int J23 = 0; J23 <= J123; ++J23)
          for (int J24 = 0; J24 <= J124; ++J24) {
            const Weight l23 = l2 + l3 - Complex(J23), l24 = l2 + l4 - Complex(J24);
            const Weight l123 = l1 + l2 + l3 - Complex(J123), l124 = l1 + l2 + l4 - Complex(J124);
            const Weight l1234 = l1 + l2 + l3 + l4 - Complex(J1234);
            Sum lhs;
            for (int j = 0; j <= std::min(J123, J124); ++j) {
              const Weight al = l1 + l2 - Complex(j);
              Complex ph = sgn(ctx, l2 - l23 - al - l24) *
                           ctx.qpow(cas(l2) - cas(l23) - cas(al) - cas(l24));
              lhs.add(ph * s6(ctx, l1, l2, l3, j, J23, J123) *
                      s6(ctx, l4, al, l3, J124 - j, J123 - j, J1234 - j) *
                      s6(ctx, l4, l2, l1, J24, j, J124));
            }
            Sum rhs;
            for (int k = std::max(J23, J24); k <= J1234; ++k) {
              const Weight be = l2 + l3 + l4 - Complex(k);
              Complex ph = sgn(ctx, l1234 - l123 - be - l124) *
                           ctx.qpow(cas(l1234) - cas(l123) - cas(be) - cas(l124));
              rhs.add(ph * s6(ctx, l4, l23, l1, k - J23, J123 - J23, J1234 - J23) *
                      s6(ctx, l4, l2, l3, J24, J23, k) *
                      s6(ctx, l1, l24, l3, J124 - J24, k - J24, J1234 - J24));
            }
            res.update(lhs.value, rhs.value, std::max(lhs.scale, rhs.scale), [&] {
              return describe("J1234=", J1234, " J123=", J123, " J124=", J124, " J23=", J23,
                              " J24=", J24);
            });
          }
  return res;
}

// Summation lemmas: each case supplies its terms and closed right side.
struct LemmaCase {
  Sum lhs;
  Complex rhs;
};

void record(Residual& res, const LemmaCase& c, const std::function<std::string()>& where) {
  Real scale = std::max(c.lhs.scale, abs(c.rhs));
  if (scale == 0) return;
  res.update(c.lhs.value, c.rhs, scale, where);
}

Complex inv_falling(const QContext& ctx, const Complex& x, int m) {
  // 1/prod_{j<m}[x - j] = qpair(x, -m); checked whenever the product is inverted.
  return qpair(ctx, x, -m);
}

Complex sign_if(int p, Complex v) { return (p % 2) ? -v : v; }

template <class Body>
void for_defects(int max_k, Body&& body) {
  for (int K = 0; K <= max_k; ++K)
    for (int J12 = 0; J12 <= K; ++J12)
      for (int J23 = 0; J23 <= K; ++J23) body(K, J12, J23);
}

Residual check_lemma2(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  const Complex two(2);
  for_defects(p.max_integer, [&](int K, int J12, int J23) {
    const Weight l12 = l1 + l2 - Complex(J12), l23 = l2 + l3 - Complex(J23);
    for (int z = 0; z <= J12; ++z)
      for (int sig = 0; sig <= K - J12; ++sig) {
        const int cq = J23 - J12 + z - sig;
        if (cq < 0) continue;
        const Weight s = l3 - Complex(sig);
        const Complex X = l3 + l2 + l1 + two * l23 - l12 - Complex(z) - s + Complex(2);
        LemmaCase c;
        const Complex step = ctx.qpow(X);
        Complex qp(1);
        for (int q = 0; q <= cq; ++q) {
          c.lhs.add(qp * inv_qfact_reg(ctx, q) * inv_qfact_reg(ctx, cq - q) *
                    inv_falling(ctx, two * l3, sig + q) * inv_falling(ctx, two * l2, J23 - sig - q));
          qp *= step;
        }
        const Complex bb = l1 + l2 + l3 + two * l23 - l12 - Complex(z) - s + Complex(1);
        c.rhs = ctx.qpow((l2 + l23 - s + Complex(1)) * Complex(cq)) * qpair(ctx, bb, cq) *
                inv_qfact_reg(ctx, cq) * inv_falling(ctx, two * l3, J23 - J12 + z) *
                inv_falling(ctx, two * l2, J23 - sig);
        record(res, c, [&] {
          return describe("J123=", K, " J12=", J12, " J23=", J23, " z=", z, " s=", sig);
        });
      }
  });
  return res;
}

Residual check_lemma3(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  const Complex two(2);
  for_defects(p.max_integer, [&](int K, int J12, int J23) {
    const Weight l12 = l1 + l2 - Complex(J12), l23 = l2 + l3 - Complex(J23);
    const Weight L = l1 + l2 + l3 - Complex(K);
    for (int z = 0; z <= J12; ++z)
      for (int sig = 0; sig <= K - J12; ++sig) {
        const Weight s = l3 - Complex(sig);
        const Complex Y = l3 + l2 + l23 - L - l12 - Complex(z) - s - Complex(1);
        const Complex step = ctx.qpow(Y);
        LemmaCase c;
        Complex qp(1);
        for (int q = 0; q <= sig; ++q) {
          const int d = J23 - J12 - sig + z + q;
          c.lhs.add(sign_if(q, qp * qpair(ctx, two * l2 - Complex(J23 - sig + z + q), d) *
                                   inv_qfact_reg(ctx, sig - q) * inv_qfact_reg(ctx, q) *
                                   inv_falling(ctx, two * l12, K - J12 - sig + q)));
          qp *= step;
        }
        c.rhs = ctx.qpow(Complex(sig) * (l2 + l23 - Complex(z) - s)) *
                qpair(ctx, two * l2 - Complex(J23 - sig + z), J23 - J12 - sig + z) *
                qfalling(ctx, two * l1 - Complex(K + J12 - J23 - z), sig) * inv_qfact_reg(ctx, sig) *
                inv_falling(ctx, two * l12, K - J12);
        record(res, c, [&] {
          return describe("J123=", K, " J12=", J12, " J23=", J23, " z=", z, " s=", sig);
        });
      }
  });
  return res;
}

Residual check_lemma5(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight& l3 = p.l3;
  const Complex two(2);
  for_defects(p.max_integer, [&](int K, int J12, int J23) {
    for (int r = 0; r <= p.max_integer; ++r) {
      const int a = J12 - r, b = K - J23 - r;
      if (a < 0 || b < 0) continue;
      const Complex step = ctx.qpow(two * l3 - Complex(K - r - 1));
      LemmaCase c;
      Complex qp(1);
      for (int q = 0; q <= std::min(a, b); ++q) {
        c.lhs.add(sign_if(q, qp * inv_qfact_reg(ctx, q) * inv_qfact_reg(ctx, a - q) *
                                 inv_qfact_reg(ctx, b - q) *
                                 inv_falling(ctx, two * l3, J23 - J12 + r + q)));
        qp *= step;
      }
      c.rhs = ctx.qpow(-static_cast<long>(a) * b) * qfalling(ctx, two * l3 - Complex(K - J12), a) *
              inv_qfact_reg(ctx, a) * inv_qfact_reg(ctx, b) * inv_falling(ctx, two * l3, J23);
      record(res, c, [&] {
        return describe("J123=", K, " J12=", J12, " J23=", J23, " r=", r);
      });
    }
  });
  return res;
}

Residual check_lemma6(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight& l2 = p.l2;
  const Complex two(2);
  for (int J23 = 0; J23 <= p.max_integer; ++J23)
    for (int ups = 0; ups <= p.max_integer; ++ups)
      for (int r = 0; r <= p.max_integer; ++r) {
        const Complex step = ctx.qpow(-(two * l2 - Complex(J23 + r - 1)));
        LemmaCase c;
        Complex qp(1);
        for (int q = 0; q <= r; ++q) {
          c.lhs.add(sign_if(q, qp * inv_qfact_reg(ctx, r - q) * inv_qfact_reg(ctx, q) *
                                   inv_qfact_reg(ctx, ups + r - q) *
                                   inv_falling(ctx, two * l2, J23 - ups - r + q)));
          qp *= step;
        }
        c.rhs = ctx.qpow(static_cast<long>(r) * (ups + r)) *
                qfalling(ctx, two * l2 - Complex(J23), r) * inv_qfact_reg(ctx, r) *
                inv_qfact_reg(ctx, ups + r) * inv_falling(ctx, two * l2, J23 - ups);
        record(res, c, [&] { return describe("J23=", J23, " upsilon=", ups, " r=", r); });
      }
  return res;
}

Residual check_lemma7(const QContext& ctx, const Q6jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  const Complex two(2);
  for_defects(p.max_integer, [&](int K, int J12, int J23) {
    const Weight l12 = l1 + l2 - Complex(J12), l23 = l2 + l3 - Complex(J23);
    for (int r = 0; r <= p.max_integer; ++r) {
      const int m = J23 - J12 + r;
      if (m < 0) continue;
      const Complex E = two * (l1 + l2 + l3) - Complex(K + J12 - r - 1);
      const Complex base = two * l1 - Complex(K + J12 - J23 - r);  // 2 l1 - K - J12 + J23 + r
      const Complex step = ctx.qpow(E);
      LemmaCase c;
      Complex qp(1);
      for (int q = 0; q <= m; ++q) {
        c.lhs.add(qp * qpair(ctx, l1 + l2 + two * l23 - l12 + Complex(q - r + 1), m - q) *
                  qpair(ctx, base - Complex(q), K - J23 + q - r) * inv_qfact_reg(ctx, q) *
                  inv_qfact_reg(ctx, m - q));
        qp *= step;
      }
      c.rhs = ctx.qpow(Complex(m) * base) * qpair(ctx, base, K - J23 - r) * qfalling(ctx, E, m) *
              inv_qfact_reg(ctx, m);
      record(res, c, [&] {
        return describe("J123=", K, " J12=", J12, " J23=", J23, " r=", r);
      });
    }
  });
  return res;
}

}  // namespace

Residual verify_q6j_identity(const QContext& ctx, Q6jIdentity which, const Q6jCheckParams& params) {
  if (params.max_defect < 0 || params.stid_depth < 0 || params.max_integer < 0)
    throw DomainError("verify_q6j_identity: negative range");
  PrecisionScope scope(ctx.working_digits());
  switch (which) {
    case Q6jIdentity::ClosedOracle: return check_closed_oracle(ctx, params);
    case Q6jIdentity::Stid1: return check_stid1(ctx, params);
    case Q6jIdentity::Stid2: return check_stid2(ctx, params);
    case Q6jIdentity::Stid3: return check_stid3(ctx, params);
    case Q6jIdentity::QsOrth: return check_qsorth(ctx, params);
    case Q6jIdentity::QsRacah: return check_qsracah(ctx, params);
    case Q6jIdentity::QsBE: return check_qsbe(ctx, params);
    case Q6jIdentity::QsYB: return check_qsyb(ctx, params);
    case Q6jIdentity::Lemma2: return check_lemma2(ctx, params);
    case Q6jIdentity::Lemma3: return check_lemma3(ctx, params);
    case Q6jIdentity::Lemma5: return check_lemma5(ctx, params);
    case Q6jIdentity::Lemma6: return check_lemma6(ctx, params);
    case Q6jIdentity::Lemma7: return check_lemma7(ctx, params);
  }
  throw DomainError("verify_q6j_identity: unknown identity");
}

}  // namespace qsym
