#include "qsym/q3j.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"

#include <algorithm>

namespace qsym {

namespace {

Complex negate_if(bool odd, Complex v) { return odd ? -v : v; }

bool outside_strip(int J, int k1, int k2) { return J < 0 || k1 < 0 || k2 < 0 || k1 + k2 < J; }

// Racah-Fock sum with the dd factor supplied by the caller.
Complex rf_with_dd(const QContext& ctx, const Weight& l1, const Weight& l2, int J, int k1, int k2,
                   const Complex& ddv) {
  if (outside_strip(J, k1, k2)) return Complex();
  const int n = k1 + k2 - J;
  const Complex l = l1 + l2 - Complex(J);
  const Complex two_l = Complex(2) * l;

  Complex e = Complex(k2) * (Complex(2) * l2 - Complex(k2)) - Complex(n) * (two_l - Complex(n)) -
              Complex(k1);
  Complex pre = i_pow(J) * ctx.qpow(e) * qfact(ctx, n) * ddv /
                qfalling_checked(ctx, two_l, n, "[2 lambda - j] in q3j");
  pre = negate_if(k1 % 2, pre);

  // qpair(l1 + a1, z) and qpair(l2 + a2, w) as prefix products.
  std::vector<Complex> p1{Complex(1)}, p2{Complex(1)};
  for (const Complex& f : qnum_run(ctx, Complex(2) * l1 - Complex(k1 - 1), k1))
    p1.push_back(p1.back() * f);
  for (const Complex& f : qnum_run(ctx, Complex(2) * l2 - Complex(k2 - 1), k2))
    p2.push_back(p2.back() * f);

  const Complex step = ctx.qpow(two_l - Complex(n - 1));  // q^{l + a + 1}
  const int zlo = std::max(0, n - k2), zhi = std::min(n, k1);
  Complex qz(1);
  for (int z = 0; z < zlo; ++z) qz *= step;
  Complex sum;
  for (int z = zlo; z <= zhi; ++z) {
    const int w = n - z;
    Complex t = qz * p1[static_cast<size_t>(z)] * p2[static_cast<size_t>(w)] *
                inv_qfact_reg(ctx, z) * inv_qfact_reg(ctx, w) * inv_qfact_reg(ctx, k1 - z) *
                inv_qfact_reg(ctx, k2 - w);
    if (z % 2) sum -= t;
    else sum += t;
    qz *= step;
  }
  return pre * sum;
}

}  // namespace

Complex dd(const QContext& ctx, const Weight& l1, const Weight& l2, int J) {
  if (J < 0) throw DomainError("dd: negative defect");
  if (J == 0) return Complex(1);
  PrecisionScope scope(ctx.working_digits());
  const Complex two_l = Complex(2) * (l1 + l2 - Complex(J));
  Complex radicand = qfact(ctx, J) *
                     qfalling_checked(ctx, Complex(2) * l1, J, "[2 l1 - j] in dd") *
                     qfalling_checked(ctx, Complex(2) * l2, J, "[2 l2 - j] in dd") /
                     qfalling_checked(ctx, two_l + Complex(J + 1), J, "[2 lambda + 2 + j] in dd");
  return sqrt(radicand);
}

Complex q3j_hw(const QContext& ctx, const Weight& l1, const Weight& l2, int J, int k) {
  if (J < 0) throw DomainError("q3j_hw: negative defect");
  if (k < 0 || k > J) return Complex();
  PrecisionScope scope(ctx.working_digits());
  long kk = k, jj = J;
  Complex e = Complex(kk * (2 * jj - kk - 1) - jj * jj) + Complex(2 * (jj - kk)) * l2;
  Complex v = i_pow(J) * ctx.qpow(e) * inv_qfact_reg(ctx, k) * inv_qfact_reg(ctx, J - k) *
              dd(ctx, l1, l2, J);
  return negate_if(k % 2, v);
}

Complex q3j_rf(const QContext& ctx, const CGKey& key) {
  if (outside_strip(key.J, key.k1, key.k2)) return Complex();
  PrecisionScope scope(ctx.working_digits());
  return rf_with_dd(ctx, key.l1, key.l2, key.J, key.k1, key.k2, dd(ctx, key.l1, key.l2, key.J));
}

Complex q3j_vdw(const QContext& ctx, const CGKey& key) {
  const int J = key.J, k1 = key.k1, k2 = key.k2;
  if (outside_strip(J, k1, k2)) return Complex();
  PrecisionScope scope(ctx.working_digits());
  const Weight &l1 = key.l1, &l2 = key.l2;
  const int n = key.n();
  const Complex l = key.lambda();
  const Complex a1 = l1 - Complex(k1), a2 = l2 - Complex(k2);

  Complex e = l1 * l1 + l2 * l2 - l * l + l1 * l2 + a1 * a2 + l1 * a2 - l2 * a1;
  Complex pre = i_pow(J) * ctx.qpow(e) * qfact(ctx, n) * dd(ctx, l1, l2, J) /
                qfalling_checked(ctx, Complex(2) * l, n, "[2 lambda - j] in q3j");

  const Complex step = ctx.qpow(-(l1 + l2 + l + Complex(1)));
  const int zlo = std::max(0, J - k2), zhi = std::min(J, k1);
  Complex qz(1);
  for (int z = 0; z < zlo; ++z) qz *= step;
  Complex sum;
  for (int z = zlo; z <= zhi; ++z) {
    const int w = J - z;
    Complex t = qz * qpair(ctx, Complex(2) * l2 - Complex(k2 + z), k2 + z - J) *
                qpair(ctx, Complex(2) * l1 - Complex(k1 + w), k1 + w - J) * inv_qfact_reg(ctx, z) *
                inv_qfact_reg(ctx, w) * inv_qfact_reg(ctx, k1 - z) * inv_qfact_reg(ctx, k2 - w);
    if (z % 2) sum -= t;
    else sum += t;
    qz *= step;
  }
  return pre * sum;
}

Complex q3j_pi(const QContext& ctx, const CGKey& key) {
  if (outside_strip(key.J, key.k1, key.k2)) return Complex();
  PrecisionScope scope(ctx.working_digits());
  Complex ratio = alpha(ctx, key.l1, key.k1) * alpha(ctx, key.l2, key.k2);
  Complex an = alpha(ctx, key.lambda(), key.n());
  if (an.is_zero()) throw NonGenericError("non-generic input: vanishing alpha in the projection symbol");
  return ratio / an * q3j_rf(ctx, key);
}

Complex q3j(const QContext& ctx, const CGKey& key) {
  return key.variant == CGVariant::Pi ? q3j_pi(ctx, key) : q3j_rf(ctx, key);
}

RecursionTable::RecursionTable(const QContext& ctx, const Weight& l1, const Weight& l2, int J,
                               int max_n)
    : J_(J) {
  if (J < 0 || max_n < 0) throw DomainError("RecursionTable: negative defect or depth");
  PrecisionScope scope(ctx.working_digits());
  const Complex two_l = Complex(2) * (l1 + l2 - Complex(J));
  strata_.resize(static_cast<size_t>(max_n) + 1);
  auto& top = strata_[0];
  for (int k = 0; k <= J; ++k) top.push_back(q3j_hw(ctx, l1, l2, J, k));

  const auto c1 = qnum_run(ctx, Complex(2) * l1 - Complex(J + max_n - 1), J + max_n);
  const auto c2 = qnum_run(ctx, Complex(2) * l2 - Complex(J + max_n - 1), J + max_n);
  // c1[i] = [2 l1 - (J + max_n - 1) + i], so [2 l1 - k + 1] sits at i = J + max_n - k.
  auto edge1 = [&](int k) { return c1[static_cast<size_t>(J + max_n - k)]; };
  auto edge2 = [&](int k) { return c2[static_cast<size_t>(J + max_n - k)]; };

  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = strata_[static_cast<size_t>(n) - 1];
    auto& cur = strata_[static_cast<size_t>(n)];
    Complex den = qnum(ctx, two_l - Complex(n - 1));
    ctx.require_nonsingular(den, "[2 lambda - n + 1] in the recursion");
    Complex inv_den = reciprocal(den);
    for (int k1 = 0; k1 <= J + n; ++k1) {
      const int k2 = J + n - k1;
      Complex v;
      if (k1 >= 1) v += edge1(k1) * prev[static_cast<size_t>(k1) - 1];
      if (k2 >= 1)
        v += ctx.qpow(Complex(-2) * (l1 - Complex(k1))) * edge2(k2) * prev[static_cast<size_t>(k1)];
      cur.push_back(v * inv_den);
    }
  }
}

Complex RecursionTable::at(int k1, int k2) const {
  if (outside_strip(J_, k1, k2)) return Complex();
  const int n = k1 + k2 - J_;
  if (n > max_n()) throw DomainError("RecursionTable: depth beyond the table");
  return strata_[static_cast<size_t>(n)][static_cast<size_t>(k1)];
}

Complex q3j_rec_oracle(const QContext& ctx, const CGKey& key) {
  if (outside_strip(key.J, key.k1, key.k2)) return Complex();
  RecursionTable table(ctx, key.l1, key.l2, key.J, key.n());
  return table.at(key.k1, key.k2);
}

CGFamily::CGFamily(const QContext& ctx, Weight l1, Weight l2, int J)
    : ctx_(&ctx), l1_(std::move(l1)), l2_(std::move(l2)), J_(J) {
  if (J < 0) throw DomainError("CGFamily: negative defect");
  lambda_ = l1_ + l2_ - Complex(J);
  dd_ = dd(ctx, l1_, l2_, J);
}

const Complex& CGFamily::psi(int k1, int k2) {
  auto [it, fresh] = psi_.try_emplace({k1, k2});
  if (fresh) it->second = rf_with_dd(*ctx_, l1_, l2_, J_, k1, k2, dd_);
  return it->second;
}

const Complex& CGFamily::alpha_cached(std::map<int, Complex>& cache, const Weight& w, int k) {
  auto [it, fresh] = cache.try_emplace(k);
  if (fresh) it->second = alpha(*ctx_, w, k);
  return it->second;
}

const Complex& CGFamily::pi(int k1, int k2) {
  auto [it, fresh] = pi_.try_emplace({k1, k2});
  if (fresh) {
    if (outside_strip(J_, k1, k2)) return it->second;
    const Complex& an = alpha_cached(alpha_, lambda_, k1 + k2 - J_);
    if (an.is_zero()) throw NonGenericError("non-generic input: vanishing alpha in the projection symbol");
    it->second = alpha_cached(alpha1_, l1_, k1) * alpha_cached(alpha2_, l2_, k2) / an * psi(k1, k2);
  }
  return it->second;
}

}  // namespace qsym
