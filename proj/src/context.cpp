#include "qsym/context.hpp"

#include "qsym/errors.hpp"

#include <string>

namespace qsym {

namespace {

Real pow10(const Real& e) { return boost::multiprecision::pow(Real(10), e); }

}  // namespace

QContext::QContext(const Complex& q, int precision_digits)
    : QContext(q, ContextOptions{precision_digits, {}, {}, {}, {}}) {}

QContext::QContext(const Complex& q, const ContextOptions& options)
    : options_(options), precision_(options.precision_digits) {
  if (precision_ < 16) throw DomainError("precision_digits must be at least 16");
  PrecisionScope scope(working_digits());

  q_ = q;
  q_.set_precision(working_digits());
  rel_tolerance_ = options.rel_tolerance ? *options.rel_tolerance : pow10(Real(-precision_) / 2);
  poch_tail_eps_ = options.poch_tail_eps ? *options.poch_tail_eps : pow10(Real(-precision_));
  poch_max_terms_ = options.poch_max_terms ? *options.poch_max_terms : 40 * precision_;
  singular_threshold_ = options.singular_threshold ? *options.singular_threshold : rel_tolerance_;
  for (Real* r : {&rel_tolerance_, &poch_tail_eps_, &singular_threshold_})
    r->precision(static_cast<unsigned>(working_digits()));
  singular_threshold_sq_ = singular_threshold_ * singular_threshold_;

  if (q_.is_zero()) throw DomainError("q must be nonzero");
  if (abs(q_ - Complex(1)) <= rel_tolerance_ || abs(q_ + Complex(1)) <= rel_tolerance_)
    throw DomainError("q must stay away from +1 and -1");

  log_q_ = log(q_);
  q_inv_ = reciprocal(q_);
  q_minus_q_inv_ = q_ - q_inv_;
  if (abs(q_minus_q_inv_) <= rel_tolerance_) throw DomainError("q - 1/q vanishes");
  inv_q_minus_q_inv_ = reciprocal(q_minus_q_inv_);
  pi_ = boost::math::constants::pi<Real>();

  // [n] = (q^n - q^-n)/(q - q^-1) along the integers.
  qfact_.reserve(kFactorialCache);
  inv_qfact_.reserve(kFactorialCache);
  inv_diff_pow_.reserve(kFactorialCache);
  qfact_.emplace_back(1);
  inv_diff_pow_.emplace_back(1);
  Complex up = q_, down = q_inv_;
  for (int n = 1; n < kFactorialCache; ++n) {
    Complex qn = (up - down) * inv_q_minus_q_inv_;
    require_nonsingular(qn, "quantum integer (q is a root of unity)");
    qfact_.push_back(qfact_.back() * qn);
    inv_diff_pow_.push_back(inv_diff_pow_.back() * inv_q_minus_q_inv_);
    up *= q_;
    down *= q_inv_;
  }
  for (const Complex& f : qfact_) inv_qfact_.push_back(reciprocal(f));
}

Complex QContext::qpow(const Complex& x) const { return exp(x * log_q_); }

Complex QContext::qpow(long n) const {
  Complex base = n >= 0 ? q_ : q_inv_;
  unsigned long e = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
  Complex result(1);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Complex QContext::inv_q_minus_q_inv_pow(int m) const {
  if (m < 0) throw DomainError("negative power of 1/(q - 1/q)");
  if (m < kFactorialCache) return inv_diff_pow_[static_cast<size_t>(m)];
  Complex r = inv_diff_pow_.back();
  for (int j = kFactorialCache - 1; j < m; ++j) r *= inv_q_minus_q_inv_;
  return r;
}

const Complex* QContext::cached_qfact(int n) const {
  return (n >= 0 && n < kFactorialCache) ? &qfact_[static_cast<size_t>(n)] : nullptr;
}

const Complex* QContext::cached_inv_qfact(int n) const {
  return (n >= 0 && n < kFactorialCache) ? &inv_qfact_[static_cast<size_t>(n)] : nullptr;
}

QContext QContext::inverted() const {
  PrecisionScope scope(working_digits());
  ContextOptions o = options_;
  o.rel_tolerance = rel_tolerance_;
  o.poch_tail_eps = poch_tail_eps_;
  o.poch_max_terms = poch_max_terms_;
  o.singular_threshold = singular_threshold_;
  return QContext(q_inv_, o);
}

void QContext::require_nonsingular(const Complex& x, const char* what) const {
  if (norm(x) < singular_threshold_sq_)
    throw NonGenericError(std::string("non-generic input: vanishing ") + what);
}

}  // namespace qsym
