#include "qsym/complex.hpp"

#include "qsym/errors.hpp"

#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qsym {

PrecisionScope::PrecisionScope(int digits)
    : saved_(Real::default_precision()), changed_(saved_ != static_cast<unsigned>(digits)) {
  if (changed_) Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() {
  if (changed_) Real::default_precision(saved_);
}

int current_precision_digits() { return static_cast<int>(Real::default_precision()); }

void Complex::set_precision(int digits) {
  re_.precision(static_cast<unsigned>(digits));
  im_.precision(static_cast<unsigned>(digits));
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Real r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im_ == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  Real r = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  return *this;
}

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const Complex& z) {
  if (z.imag() == 0) return boost::multiprecision::abs(z.real());
  if (z.real() == 0) return boost::multiprecision::abs(z.imag());
  return boost::multiprecision::hypot(z.real(), z.imag());
}

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.real());
  if (z.imag() == 0) return Complex(m, Real(0));
  return Complex(m * boost::multiprecision::cos(z.imag()), m * boost::multiprecision::sin(z.imag()));
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  if (z.imag() == 0 && z.real() > 0) return Complex(boost::multiprecision::log(z.real()), Real(0));
  return Complex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.imag(), z.real()));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex();
  if (z.imag() == 0 && z.real() > 0) return Complex(boost::multiprecision::sqrt(z.real()), Real(0));
  Real r = abs(z);
  if (z.real() >= 0) {
    Real t = boost::multiprecision::sqrt((r + z.real()) / 2);
    return Complex(t, z.imag() / (2 * t));
  }
  Real t = boost::multiprecision::sqrt((r - z.real()) / 2);
  Real re = boost::multiprecision::abs(z.imag()) / (2 * t);
  return Complex(re, boost::multiprecision::signbit(z.imag()) ? Real(-t) : t);
}

Complex reciprocal(const Complex& z) { return Complex(1) / z; }

Complex i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Complex(Real(1), Real(0));
    case 1: return Complex(Real(0), Real(1));
    case 2: return Complex(Real(-1), Real(0));
    default: return Complex(Real(0), Real(-1));
  }
}

Complex sign_pow(const Complex& x, const Real& pi) {
  return exp(Complex(-pi * x.imag(), pi * x.real()));
}

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out;
  for (size_t i = b; i < e; ++i)
    if (!std::isspace(static_cast<unsigned char>(s[i]))) out.push_back(s[i]);
  return out;
}

Real parse_real(const std::string& s, std::string_view whole) {
  if (s.empty()) throw DomainError("malformed number: '" + std::string(whole) + "'");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
          c == '+' || c == '-'))
      throw DomainError("malformed number: '" + std::string(whole) + "'");
  }
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw DomainError("malformed number: '" + std::string(whole) + "'");
  }
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw DomainError("empty number");
  if (s.back() != 'i') return Complex(parse_real(s, text), Real(0));
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 0;) {
    if ((s[i] == '+' || s[i] == '-') && !(i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E'))) {
      split = i;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Real re = re_part.empty() ? Real(0) : parse_real(re_part, text);
  return Complex(re, parse_real(im_part, text));
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_string(const Complex& z, int digits) {
  std::string re = to_string(z.real(), digits);
  std::string im = to_string(boost::multiprecision::abs(z.imag()), digits);
  bool neg = boost::multiprecision::signbit(z.imag()) && z.imag() != 0;
  return re + (neg ? " - " : " + ") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << to_string(z, static_cast<int>(os.precision()));
}

}  // namespace qsym
