#include "qsym/qarith.hpp"

#include "qsym/errors.hpp"

#include <cstdlib>

namespace qsym {

namespace {

// prod_{j=0..m-1} [x + step*j] with step = +-1. One complex exponential, then
// q^(x+j) and q^-(x+j) advance by multiplication.
Complex progression(const QContext& ctx, const Complex& x, int m, int step, const char* check) {
  if (m <= 0) return Complex(1);
  Complex up = ctx.qpow(x);
  Complex down = reciprocal(up);
  const Complex& su = step > 0 ? ctx.q() : ctx.q_inv();
  const Complex& sd = step > 0 ? ctx.q_inv() : ctx.q();
  Complex prod(1);
  for (int j = 0; j < m; ++j) {
    Complex f = up - down;
    if (check) ctx.require_nonsingular(f * ctx.inv_q_minus_q_inv(), check);
    prod *= f;
    if (j + 1 < m) {
      up *= su;
      down *= sd;
    }
  }
  return prod * ctx.inv_q_minus_q_inv_pow(m);
}

}  // namespace

Complex qnum(const QContext& ctx, const Complex& x) {
  PrecisionScope scope(ctx.working_digits());
  Complex up = ctx.qpow(x);
  return (up - reciprocal(up)) * ctx.inv_q_minus_q_inv();
}

Complex qnum(const QContext& ctx, long n) {
  PrecisionScope scope(ctx.working_digits());
  Complex up = ctx.qpow(n);
  return (up - ctx.qpow(-n)) * ctx.inv_q_minus_q_inv();
}

std::vector<Complex> qnum_run(const QContext& ctx, const Complex& x, int m) {
  std::vector<Complex> out;
  if (m <= 0) return out;
  PrecisionScope scope(ctx.working_digits());
  out.reserve(static_cast<size_t>(m));
  Complex up = ctx.qpow(x);
  Complex down = reciprocal(up);
  for (int j = 0; j < m; ++j) {
    out.push_back((up - down) * ctx.inv_q_minus_q_inv());
    up *= ctx.q();
    down *= ctx.q_inv();
  }
  return out;
}

Complex qfact(const QContext& ctx, int n) {
  if (n < 0) throw DomainError("qfact: negative argument " + std::to_string(n));
  if (const Complex* c = ctx.cached_qfact(n)) return *c;
  PrecisionScope scope(ctx.working_digits());
  return progression(ctx, Complex(1), n, +1, nullptr);
}

Complex inv_qfact_reg(const QContext& ctx, int n) {
  if (n < 0) return Complex();
  if (const Complex* c = ctx.cached_inv_qfact(n)) return *c;
  PrecisionScope scope(ctx.working_digits());
  return reciprocal(qfact(ctx, n));
}

Complex qbinom(const QContext& ctx, int m, int n) {
  if (m < 0) throw DomainError("qbinom: negative upper index");
  if (n < 0 || n > m) return Complex();
  PrecisionScope scope(ctx.working_digits());
  return qfact(ctx, m) * inv_qfact_reg(ctx, n) * inv_qfact_reg(ctx, m - n);
}

Complex qrising(const QContext& ctx, const Complex& x, int m) {
  if (m < 0) throw DomainError("qrising: negative length");
  PrecisionScope scope(ctx.working_digits());
  return progression(ctx, x, m, +1, nullptr);
}

Complex qpair(const QContext& ctx, const Complex& b, int d) {
  if (d == 0) return Complex(1);
  PrecisionScope scope(ctx.working_digits());
  if (d > 0) return progression(ctx, b + Complex(1), d, +1, nullptr);
  return reciprocal(progression(ctx, b + Complex(d + 1), -d, +1, "quantum number in qpair"));
}

Complex qfalling(const QContext& ctx, const Complex& x, int m) {
  if (m == 0) return Complex(1);
  PrecisionScope scope(ctx.working_digits());
  if (m > 0) return progression(ctx, x, m, -1, nullptr);
  return reciprocal(progression(ctx, x + Complex(1), -m, +1, "quantum number in falling product"));
}

Complex qfalling_checked(const QContext& ctx, const Complex& x, int m, const char* what) {
  if (m == 0) return Complex(1);
  PrecisionScope scope(ctx.working_digits());
  if (m > 0) return progression(ctx, x, m, -1, what);
  return reciprocal(progression(ctx, x + Complex(1), -m, +1, what));
}

Complex poch(const QContext& ctx, const Complex& a, const Complex& base, int n) {
  if (n < 0) throw DomainError("poch: negative length");
  PrecisionScope scope(ctx.working_digits());
  Complex prod(1);
  Complex t = a;
  for (int j = 0; j < n; ++j) {
    prod *= Complex(1) - t;
    t *= base;
  }
  return prod;
}

Complex poch_inf(const QContext& ctx, const Complex& a, const Complex& base) {
  PrecisionScope scope(ctx.working_digits());
  Real rb = abs(base);
  if (rb >= 1) throw DomainError("poch_inf: |base| must be below 1");
  Real bound = ctx.poch_tail_eps() * (Real(1) - rb);
  Complex prod(1);
  Complex t = a;
  for (int m = 0;; ++m) {
    if (abs(t) < bound) return prod;
    if (m >= ctx.poch_max_terms())
      throw ConvergenceError("poch_inf: term cap reached before the tail bound");
    prod *= Complex(1) - t;
    t *= base;
  }
}

Complex phi21(const QContext& ctx, const Complex& a, const Complex& b, const Complex& c,
              const Complex& base, const Complex& z) {
  PrecisionScope scope(ctx.working_digits());
  const Real ra = abs(a), rb = abs(b), rc = abs(c), rbase = abs(base), rz = abs(z);
  Complex sum(0);
  Complex term(1);
  Complex pw(1);  // base^n
  Real beta(1);   // |base|^n
  for (int n = 0;; ++n) {
    sum += term;
    Complex fa = Complex(1) - a * pw;
    Complex fb = Complex(1) - b * pw;
    if (fa.is_zero() || fb.is_zero()) return sum;
    // Every later ratio |t_{k+1}/t_k| (k >= n) is bounded by rho.
    if (rbase < 1 && rc * beta < 1 && rbase * beta < 1) {
      Real rho = (1 + ra * beta) * (1 + rb * beta) * rz /
                 ((1 - rbase * beta) * (1 - rc * beta));
      if (rho < 1) {
        Real tail = abs(term) * rho / (1 - rho);
        if (tail <= ctx.poch_tail_eps() * abs(sum)) return sum;
      }
    }
    if (n >= ctx.poch_max_terms()) throw ConvergenceError("phi21: series does not converge");
    Complex next_pw = pw * base;
    Complex den = (Complex(1) - next_pw) * (Complex(1) - c * pw);
    ctx.require_nonsingular(den, "denominator Pochhammer factor in phi21");
    term *= fa * fb * z / den;
    pw = std::move(next_pw);
    beta *= rbase;
  }
}

Complex phi21_terminating(const QContext& ctx, int m, const Complex& b, const Complex& c,
                          const Complex& base, const Complex& z) {
  if (m < 0) throw DomainError("phi21_terminating: negative order");
  PrecisionScope scope(ctx.working_digits());
  Complex inv_base = reciprocal(base);
  Complex a_pw(1);  // base^(n-m)
  for (int j = 0; j < m; ++j) a_pw *= inv_base;
  Complex sum(0);
  Complex term(1);
  Complex pw(1);
  for (int n = 0; n <= m; ++n) {
    sum += term;
    if (n == m) break;
    Complex next_pw = pw * base;
    Complex den = (Complex(1) - next_pw) * (Complex(1) - c * pw);
    ctx.require_nonsingular(den, "denominator Pochhammer factor in phi21");
    term *= (Complex(1) - a_pw) * (Complex(1) - b * pw) * z / den;
    a_pw *= base;
    pw = std::move(next_pw);
  }
  return sum;
}

}  // namespace qsym
