#pragma once

#include "qsym/complex.hpp"

#include <optional>
#include <vector>

namespace qsym {

struct ContextOptions {
  int precision_digits = 64;
  // Unset fields take their defaults from precision_digits.
  std::optional<Real> rel_tolerance;       // 10^(-p/2)
  std::optional<Real> poch_tail_eps;       // 10^(-p)
  std::optional<int> poch_max_terms;       // 40 p
  std::optional<Real> singular_threshold;  // rel_tolerance
};

// Immutable evaluation environment: q, working precision, tolerances and a few
// q-dependent constants shared by every formula.
class QContext {
 public:
  explicit QContext(const Complex& q, const ContextOptions& options = {});
  QContext(const Complex& q, int precision_digits);

  const Complex& q() const { return q_; }
  int precision_digits() const { return precision_; }
  // Digits used for arithmetic: precision_digits plus a fixed guard.
  static constexpr int kGuardDigits = 8;
  int working_digits() const { return precision_ + kGuardDigits; }
  const Real& rel_tolerance() const { return rel_tolerance_; }
  const Real& poch_tail_eps() const { return poch_tail_eps_; }
  int poch_max_terms() const { return poch_max_terms_; }
  const Real& singular_threshold() const { return singular_threshold_; }
  const ContextOptions& options() const { return options_; }

  const Complex& log_q() const { return log_q_; }
  const Complex& q_inv() const { return q_inv_; }
  const Complex& q_minus_q_inv() const { return q_minus_q_inv_; }
  const Complex& inv_q_minus_q_inv() const { return inv_q_minus_q_inv_; }
  const Real& pi() const { return pi_; }

  // q^x on the principal branch of log q.
  Complex qpow(const Complex& x) const;
  // q^n by repeated squaring.
  Complex qpow(long n) const;
  // (q - q^-1)^(-m), m >= 0.
  Complex inv_q_minus_q_inv_pow(int m) const;

  // Cached [n]! for 0 <= n < factorial_cache_size(); computed on demand beyond.
  static constexpr int kFactorialCache = 48;
  const Complex* cached_qfact(int n) const;
  const Complex* cached_inv_qfact(int n) const;

  // Sibling context with q replaced by 1/q and identical options.
  QContext inverted() const;

  // Throws NonGenericError when |x| < singular_threshold.
  void require_nonsingular(const Complex& x, const char* what) const;

 private:
  ContextOptions options_;
  int precision_;
  Complex q_;
  Real rel_tolerance_;
  Real poch_tail_eps_;
  int poch_max_terms_;
  Real singular_threshold_;
  Real singular_threshold_sq_;
  Complex log_q_;
  Complex q_inv_;
  Complex q_minus_q_inv_;
  Complex inv_q_minus_q_inv_;
  Real pi_;
  std::vector<Complex> qfact_;
  std::vector<Complex> inv_qfact_;
  std::vector<Complex> inv_diff_pow_;
};

}  // namespace qsym
