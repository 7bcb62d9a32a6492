#include "qsym/basic_identities.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"

#include <algorithm>
#include <sstream>

namespace qsym {

const char* basic_identity_name(BasicIdentity which) {
  switch (which) {
    case BasicIdentity::QBinRec: return "QBINREC";
    case BasicIdentity::QBid1: return "QBID1";
    case BasicIdentity::QBid2: return "QBID2";
    case BasicIdentity::QBid3: return "QBID3";
    case BasicIdentity::QBid4: return "QBID4";
    case BasicIdentity::QPfid2: return "QPFID2";
    case BasicIdentity::QPfid3: return "QPFID3";
    case BasicIdentity::Id1: return "ID1";
    case BasicIdentity::Id2: return "ID2";
    case BasicIdentity::QId1: return "QID1";
    case BasicIdentity::QId2: return "QID2";
    case BasicIdentity::HId1: return "HID1";
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

struct Sum {
  Complex value;
  Real scale = 0;
  void add(const Complex& t) {
    value += t;
    Real a = abs(t);
    if (a > scale) scale = a;
  }
};

Complex ipow(const Complex& z, long n) {
  Complex base = n >= 0 ? z : reciprocal(z);
  unsigned long e = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  Complex r(1);
  while (e) {
    if (e & 1UL) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Complex flip(int j, const Complex& v) { return (j % 2) ? -v : v; }

const int kSigns[] = {1, -1};

Residual qbinrec(const QContext& ctx) {
  Residual res;
  for (int n = 1; n <= 12; ++n)
    for (int m = 0; m <= n; ++m)
      for (int s : kSigns) {
        Complex lhs = qbinom(ctx, n, m);
        Complex rhs = ctx.qpow(static_cast<long>(s) * m) * qbinom(ctx, n - 1, m) +
                      ctx.qpow(-static_cast<long>(s) * (n - m)) * qbinom(ctx, n - 1, m - 1);
        res.update(lhs, rhs, Real(0), [&] { return describe("n=", n, " m=", m, " sign=", s); });
      }
  return res;
}

Residual qbid1(const QContext& ctx, const BasicParams& p) {
  Residual res;
  for (const auto& t : p.tuples) {
    const int a = t[0] % 8;
    const int b = (t[2] % 2) ? t[1] % 8 : a;  // half of the draws sit on the diagonal
    for (int s : kSigns) {
      Sum lhs;
      for (int j = b; j <= a; ++j)
        lhs.add(flip(j, ctx.qpow(static_cast<long>(s) * ((a - b) * j - (j - b))) *
                            inv_qfact_reg(ctx, a - j) * inv_qfact_reg(ctx, j - b)));
      Complex rhs = a == b ? Complex(a % 2 ? -1 : 1) : Complex();
      res.update(lhs.value, rhs, std::max(Real(1), lhs.scale),
                 [&] { return describe("a=", a, " b=", b, " sign=", s); });
    }
  }
  return res;
}

Residual qbid2(const QContext& ctx, const BasicParams& p) {
  Residual res;
  for (const auto& t : p.tuples) {
    const int a = t[0], b = t[1] % (a + 1), c = t[2] % (a + 1);
    for (int s : kSigns) {
      Sum lhs;
      for (int j = 0; j <= std::min(b, c); ++j)
        lhs.add(ctx.qpow(static_cast<long>(s) * a * j) * inv_qfact_reg(ctx, j) *
                inv_qfact_reg(ctx, b - j) * inv_qfact_reg(ctx, c - j) *
                inv_qfact_reg(ctx, a - b - c + j));
      Complex rhs = ctx.qpow(static_cast<long>(s) * b * c) * qfact(ctx, a) * inv_qfact_reg(ctx, b) *
                    inv_qfact_reg(ctx, c) * inv_qfact_reg(ctx, a - b) * inv_qfact_reg(ctx, a - c);
      res.update(lhs.value, rhs, lhs.scale,
                 [&] { return describe("a=", a, " b=", b, " c=", c, " sign=", s); });
    }
  }
  // a continued to a generic value; b, c stay integers.
  const Complex& a = p.a;
  for (const auto& t : p.tuples) {
    const int b = t[1] % 6, c = t[2] % 6;
    for (int s : kSigns) {
      Sum lhs;
      for (int j = 0; j <= std::min(b, c); ++j)
        lhs.add(ctx.qpow(Complex(s * j) * a) /
                qpair(ctx, a - Complex(b + c), j) * inv_qfact_reg(ctx, j) *
                inv_qfact_reg(ctx, b - j) * inv_qfact_reg(ctx, c - j));
      Complex rhs = ctx.qpow(static_cast<long>(s) * b * c) * qpair(ctx, a - Complex(b), b) *
                    inv_qfact_reg(ctx, b) * inv_qfact_reg(ctx, c) /
                    qpair(ctx, a - Complex(b + c), b);
      res.update(lhs.value, rhs, lhs.scale,
                 [&] { return describe("generic a, b=", b, " c=", c, " sign=", s); });
    }
  }
  return res;
}

Residual qbid3(const QContext& ctx, const BasicParams& p) {
  Residual res;
  for (const auto& t : p.tuples) {
    const int a = t[0] % 9, b = t[1] % 9, c = t[2] % (a + 1);
    Sum lhs;
    for (int j = 0; j <= c; ++j)
      lhs.add(ctx.qpow(static_cast<long>(j) * (a + b - c + 2)) * qfact(ctx, a - j) *
              qfact(ctx, b + j) * inv_qfact_reg(ctx, j) * inv_qfact_reg(ctx, c - j));
    Complex rhs = ctx.qpow(static_cast<long>(c) * (b + 1)) * qfact(ctx, a - c) * qfact(ctx, b) *
                  qfact(ctx, a + b + 1) * inv_qfact_reg(ctx, c) *
                  inv_qfact_reg(ctx, a + b - c + 1);
    res.update(lhs.value, rhs, lhs.scale,
               [&] { return describe("a=", a, " b=", b, " c=", c); });
  }
  // a and b continued to generic values.
  const Complex &a = p.a, &b = p.b;
  for (int c = 0; c <= 6; ++c) {
    const Complex step = ctx.qpow(a + b - Complex(c - 2));
    Sum lhs;
    Complex qj(1);
    for (int j = 0; j <= c; ++j) {
      lhs.add(qj * qpair(ctx, a, -j) * qpair(ctx, b, j) * inv_qfact_reg(ctx, j) *
              inv_qfact_reg(ctx, c - j));
      qj *= step;
    }
    Complex rhs = ctx.qpow(Complex(c) * (b + Complex(1))) * qpair(ctx, a, -c) *
                  qpair(ctx, a + b - Complex(c - 1), c) * inv_qfact_reg(ctx, c);
    res.update(lhs.value, rhs, lhs.scale, [&] { return describe("generic a, b, c=", c); });
  }
  return res;
}

Residual qbid4(const QContext& ctx, const BasicParams& p) {
  Residual res;
  for (const auto& t : p.tuples) {
    const int a = t[0], b = t[1] % (a + 1), c = t[2] % (a + 1);
    for (int s : kSigns) {
      Sum lhs;
      for (int j = 0; j <= std::min(b, c); ++j)
        lhs.add(flip(j, ctx.qpow(static_cast<long>(s) * j * (a - b - c + 1)) * qfact(ctx, a - j) *
                            inv_qfact_reg(ctx, j) * inv_qfact_reg(ctx, b - j) *
                            inv_qfact_reg(ctx, c - j)));
      Complex rhs = ctx.qpow(-static_cast<long>(s) * b * c) * qfact(ctx, a - b) *
                    qfact(ctx, a - c) * inv_qfact_reg(ctx, b) * inv_qfact_reg(ctx, c) *
                    inv_qfact_reg(ctx, a - b - c);
      res.update(lhs.value, rhs, lhs.scale,
                 [&] { return describe("a=", a, " b=", b, " c=", c, " sign=", s); });
    }
  }
  // a continued to a generic value.
  const Complex& a = p.a;
  for (const auto& t : p.tuples) {
    const int b = t[1] % 6, c = t[2] % 6;
    for (int s : kSigns) {
      const Complex step = ctx.qpow(Complex(s) * (a - Complex(b + c - 1)));
      Sum lhs;
      Complex qj(1);
      for (int j = 0; j <= std::min(b, c); ++j) {
        lhs.add(flip(j, qj * qpair(ctx, a, -j) * inv_qfact_reg(ctx, j) * inv_qfact_reg(ctx, b - j) *
                            inv_qfact_reg(ctx, c - j)));
        qj *= step;
      }
      Complex rhs = ctx.qpow(-static_cast<long>(s) * b * c) * qpair(ctx, a, -b) *
                    qpair(ctx, a - Complex(b + c), b) * inv_qfact_reg(ctx, b) *
                    inv_qfact_reg(ctx, c);
      res.update(lhs.value, rhs, lhs.scale,
                 [&] { return describe("generic a, b=", b, " c=", c, " sign=", s); });
    }
  }
  return res;
}

Residual qpfid(const QContext& ctx, const BasicParams& p, bool lower) {
  Residual res;
  const Complex& b = p.b;
  for (int d = -8; d <= 8; ++d)
    for (int c = 0; c <= 8; ++c) {
      Complex lhs = lower ? qpair(ctx, b, d) * qfalling(ctx, b, c)
                          : qpair(ctx, b, d) / qrising(ctx, b + Complex(1), c);
      Complex rhs = lower ? qpair(ctx, b - Complex(c), d + c) : qpair(ctx, b + Complex(c), d - c);
      res.update(lhs, rhs, Real(0), [&] { return describe("d=", d, " c=", c); });
    }
  return res;
}

Residual id1(const QContext& ctx, const BasicParams& p) {
  Residual res;
  const Complex &a = p.a, &base = p.base;
  const Complex full = poch_inf(ctx, a, base);
  Complex bn(1);
  for (int n = 0; n <= 8; ++n) {
    res.update(poch(ctx, a, base, n) * poch_inf(ctx, a * bn, base), full, Real(0),
               [&] { return describe("n=", n); });
    bn *= base;
  }
  return res;
}

Residual id2(const QContext& ctx, const BasicParams& p) {
  Residual res;
  const Complex &a = p.a, &b = p.b;
  const Complex ratio = -(b / a);
  for (int n = 0; n <= 10; ++n) {
    const Complex an = poch(ctx, a, b, n);
    const Complex shifted = reciprocal(a) * ipow(b, 1 - n);
    for (int k = 0; k <= n; ++k) {
      Complex lhs = poch(ctx, a, b, n - k);
      Complex rhs = ipow(ratio, k) * ipow(b, static_cast<long>(k) * (k - 1) / 2 - static_cast<long>(n) * k) *
                    an / poch(ctx, shifted, b, k);
      res.update(lhs, rhs, Real(0), [&] { return describe("n=", n, " k=", k); });
    }
  }
  return res;
}

Residual qid1(const QContext& ctx) {
  Residual res;
  const Complex q2 = ctx.q() * ctx.q();
  for (int k = 0; k <= 10; ++k) {
    Complex rhs = ctx.qpow(-static_cast<long>(k) * (k + 1) / 2) * ctx.inv_q_minus_q_inv_pow(k) *
                  poch(ctx, q2, q2, k);
    res.update(qfact(ctx, k), flip(k, rhs), Real(0), [&] { return describe("k=", k); });
  }
  return res;
}

Residual qid2(const QContext& ctx, const BasicParams& p) {
  Residual res;
  const Complex& J = p.a;
  const Complex q2 = ctx.q() * ctx.q();
  const Complex start = ctx.qpow(Complex(-2) * J);
  for (int k = 0; k <= 10; ++k) {
    Complex rhs = ctx.qpow(Complex(k) * (Complex(2) * J - Complex(k - 1)) * Complex(Real(0.5))) *
                  ctx.inv_q_minus_q_inv_pow(k) * poch(ctx, start, q2, k);
    res.update(qfalling(ctx, J, k), rhs, Real(0), [&] { return describe("k=", k); });
  }
  return res;
}

Residual hid1(const QContext& ctx, const BasicParams& p) {
  Residual res;
  const Complex &a = p.a, &b = p.b, &c = p.c, &base = p.base;
  const Complex z = c / (a * b);
  Complex lhs = phi21(ctx, a, b, c, base, z);
  Complex rhs = poch_inf(ctx, c / a, base) * poch_inf(ctx, c / b, base) /
                (poch_inf(ctx, c, base) * poch_inf(ctx, z, base));
  res.update(lhs, rhs, Real(0), [] { return std::string("z = c/(ab)"); });
  return res;
}

}  // namespace

Residual verify_basic_identity(const QContext& ctx, BasicIdentity which,
                                  const BasicParams& params) {
  for (const auto& t : params.tuples)
    for (int v : t)
      if (v < 0) throw DomainError("verify_basic_identity: integer draws must be nonnegative");
  PrecisionScope scope(ctx.working_digits());
  switch (which) {
    case BasicIdentity::QBinRec: return qbinrec(ctx);
    case BasicIdentity::QBid1: return qbid1(ctx, params);
    case BasicIdentity::QBid2: return qbid2(ctx, params);
    case BasicIdentity::QBid3: return qbid3(ctx, params);
    case BasicIdentity::QBid4: return qbid4(ctx, params);
    case BasicIdentity::QPfid2: return qpfid(ctx, params, true);
    case BasicIdentity::QPfid3: return qpfid(ctx, params, false);
    case BasicIdentity::Id1: return id1(ctx, params);
    case BasicIdentity::Id2: return id2(ctx, params);
    case BasicIdentity::QId1: return qid1(ctx);
    case BasicIdentity::QId2: return qid2(ctx, params);
    case BasicIdentity::HId1: return hid1(ctx, params);
  }
  throw DomainError("verify_basic_identity: unknown identity");
}

}  // namespace qsym
