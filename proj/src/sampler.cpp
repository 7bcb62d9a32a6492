#include "qsym/sampler.hpp"

#include <array>
#include <cmath>
#include <string>

namespace qsym {

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::RealGeneric: return "real";
    case Regime::ComplexGeneric: return "complex";
    case Regime::SmallQ: return "smallq";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view name) {
  if (name == "real") return Regime::RealGeneric;
  if (name == "complex") return Regime::ComplexGeneric;
  if (name == "smallq") return Regime::SmallQ;
  return std::nullopt;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::string_view id, int trial, int attempt) {
  const std::uint64_t h = fnv1a(id);
  std::array<std::uint32_t, 7> words = {
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(h),    static_cast<std::uint32_t>(h >> 32),
      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt), 0x71736d7aU};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(Regime regime, std::uint64_t seed, std::string_view id, int trial, int attempt)
    : regime_(regime), rng_(make_engine(seed, id, trial, attempt)) {}

Real Sampler::uniform(double lo, double hi) {
  // 53 random bits scaled into [lo, hi).
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return Real(lo + (hi - lo) * u);
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Complex Sampler::box(double re_lo, double re_hi, double im_lo, double im_hi) {
  Real re = uniform(re_lo, re_hi);
  Real im = uniform(im_lo, im_hi);
  return Complex(re, im);
}

Complex Sampler::annulus(double r_lo, double r_hi) {
  const double r = static_cast<double>(uniform(r_lo, r_hi));
  const double t = static_cast<double>(uniform(-M_PI, M_PI));
  return Complex(Real(r * std::cos(t)), Real(r * std::sin(t)));
}

Complex Sampler::q() {
  if (regime_ == Regime::SmallQ) return Complex(uniform(0.2, 0.8));
  return Complex(uniform(1.05, 2.0));
}

Complex Sampler::weight(int i) {
  const Real s = boost::multiprecision::sqrt(Real(2)) * i;
  Complex w(Real(integer(4, 9)) + (s - boost::multiprecision::floor(s)));
  if (regime_ == Regime::ComplexGeneric) w.imag() = uniform(-0.3, 0.3);
  return w;
}

Complex Sampler::poch_base(const Complex& q) {
  if (regime_ == Regime::SmallQ) return q;
  return annulus(0.2, 0.8);
}

}  // namespace qsym
