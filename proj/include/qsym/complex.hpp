#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qsym {

// Variable-precision MPFR real without expression templates.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the process-wide default precision (decimal digits) for the lifetime of
// the scope, writing only on change. Enter parallel regions with the precision
// already set.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
  bool changed_;
};

int current_precision_digits();

class Complex {
 public:
  Complex() : re_(0), im_(0) {}
  Complex(const Real& re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  Complex(const Real& re, const Real& im) : re_(re), im_(im) {}
  Complex(int re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  Complex(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  Complex(double re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  // Re-rounds both parts to the given number of decimal digits.
  void set_precision(int digits);

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s);

  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }

  // Exact bitwise equality of both parts.
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex reciprocal(const Complex& z);
Complex i_pow(long n);           // i^n, exact
Complex sign_pow(const Complex& x, const Real& pi);  // exp(i*pi*x)

// Decimal literal parsing: "5.3", "-2e-3", "5.3+0.2i", "0.5-1i", "2i", "i".
// Parsed at the current default precision, so no double rounding.
Complex parse_complex(std::string_view text);

// "re + im i" with `digits` significant digits per part.
std::string to_string(const Complex& z, int digits);
std::string to_string(const Real& x, int digits);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace qsym
