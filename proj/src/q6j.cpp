#include "qsym/q6j.hpp"

#include "qsym/errors.hpp"
#include "qsym/q3j.hpp"
#include "qsym/qarith.hpp"

#include <algorithm>

namespace qsym {

namespace {

void require_valid(const SixJKey& key, const char* who) {
  if (!key.valid())
    throw DomainError(std::string(who) + ": defects must satisfy 0 <= J12, J23 <= J123");
}

Complex inv_falling(const QContext& ctx, const Complex& x, int m, const char* what) {
  return reciprocal(qfalling_checked(ctx, x, m, what));
}

}  // namespace

Complex q6j_closed(const QContext& ctx, const SixJKey& key) {
  require_valid(key, "q6j_closed");
  PrecisionScope scope(ctx.working_digits());
  const int J12 = key.J12, J23 = key.J23, K = key.J123;
  const Weight &l1 = key.l1, &l2 = key.l2, &l3 = key.l3;
  const Weight l12 = key.l12(), l23 = key.l23(), L = key.l123();
  const Complex two(2);
  const char* what = "q-number product in the q6j prefactor";

  Complex pre = dd(ctx, l1, l23, K - J23) * inv_falling(ctx, two * l23, K - J23, what) *
                dd(ctx, l2, l3, J23) * inv_falling(ctx, two * l3, J23, what) *
                dd(ctx, l12, l3, K - J12) * inv_falling(ctx, two * l12, K - J12, what) *
                dd(ctx, l1, l2, J12) * inv_falling(ctx, two * l1, J12, what) *
                inv_falling(ctx, two * l2, J12, what);

  Complex sum;
  const int zlo = std::max(0, J12 + J23 - K), zhi = std::min(J12, J23);
  for (int z = zlo; z <= zhi; ++z) {
    Complex t = qpair(ctx, two * L + Complex(1), K - z) *
                qfalling(ctx, two * l1 - Complex(K - J23), z) *
                qfalling(ctx, two * l3 - Complex(K - J12), z) *
                qfalling(ctx, two * l2 - Complex(J23), J12 - z) * inv_qfact_reg(ctx, z) *
                inv_qfact_reg(ctx, J12 - z) * inv_qfact_reg(ctx, J23 - z) *
                inv_qfact_reg(ctx, K - J12 - J23 + z);
    if (z % 2) sum -= t;
    else sum += t;
  }
  return pre * sum;
}

Complex q6j_contraction_oracle(const QContext& ctx, const SixJKey& key) {
  require_valid(key, "q6j_contraction_oracle");
  PrecisionScope scope(ctx.working_digits());
  const int J12 = key.J12, J23 = key.J23, K = key.J123;
  const Weight &l1 = key.l1, &l2 = key.l2, &l3 = key.l3;
  const Weight l12 = key.l12(), l23 = key.l23();

  CGFamily outer(ctx, l1, l23, K - J23);
  const Complex& divisor = outer.psi(K - J23, 0);
  if (divisor.is_zero()) throw NonGenericError("non-generic input: vanishing boundary q3j symbol");

  CGFamily f23(ctx, l2, l3, J23), f123(ctx, l12, l3, K - J12), f12(ctx, l1, l2, J12);
  Complex sum;
  for (int k = 0; k <= K - J12; ++k) {
    if (J23 - k < 0) continue;
    sum += alpha(ctx, l2, J23 - k) * alpha(ctx, l3, k) * f23.psi(J23 - k, k) *
           f123.psi(K - J12 - k, k) * f12.psi(K - J23, J23 - k);
  }
  return sum / divisor;
}

}  // namespace qsym
