#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"

#include <vector>

namespace qsym {

// [x] = (q^x - q^-x)/(q - q^-1).
Complex qnum(const QContext& ctx, const Complex& x);
Complex qnum(const QContext& ctx, long n);

// [x], [x+1], ..., [x+m-1] from a single complex exponential.
std::vector<Complex> qnum_run(const QContext& ctx, const Complex& x, int m);

// [n]! for n >= 0; DomainError for n < 0.
Complex qfact(const QContext& ctx, int n);

// 1/[n]! for n >= 0 and exactly 0 for n < 0.
Complex inv_qfact_reg(const QContext& ctx, int n);

// [m]!/([n]![m-n]!), zero outside 0 <= n <= m.
Complex qbinom(const QContext& ctx, int m, int n);

// <b+d | b>: prod_{j=1..d} [b+j] for d > 0, 1/prod_{j=1..-d} [b+d+j] for d < 0.
// Factors inverted for d < 0 are checked against the singular threshold.
Complex qpair(const QContext& ctx, const Complex& b, int d);

// prod_{j=0..m-1} [x-j] for m >= 0, extended to m < 0 as qpair(x-m, m).
Complex qfalling(const QContext& ctx, const Complex& x, int m);

// prod_{j=0..m-1} [x+j], m >= 0.
Complex qrising(const QContext& ctx, const Complex& x, int m);

// Same as qfalling but every factor is checked against the singular
// threshold; used for products that end up in a denominator.
Complex qfalling_checked(const QContext& ctx, const Complex& x, int m, const char* what);

// (a; base)_n = prod_{j=0..n-1} (1 - a base^j).
Complex poch(const QContext& ctx, const Complex& a, const Complex& base, int n);

// (a; base)_inf, truncated once |a base^M| / (1 - |base|) < poch_tail_eps.
Complex poch_inf(const QContext& ctx, const Complex& a, const Complex& base);

// 2phi1(a, b; c; base, z) summed until the geometric tail bound drops below
// poch_tail_eps (relative to the partial sum), or exactly when a Pochhammer
// factor in the numerator vanishes.
Complex phi21(const QContext& ctx, const Complex& a, const Complex& b, const Complex& c,
              const Complex& base, const Complex& z);

// Terminating case a = base^(-m): the exact sum over n = 0..m.
Complex phi21_terminating(const QContext& ctx, int m, const Complex& b, const Complex& c,
                          const Complex& base, const Complex& z);

}  // namespace qsym
