#pragma once

#include "qsym/complex.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace qsym {

// RealGeneric: real q in [1.05, 2], real weights u_i + frac(i sqrt 2), u_i in 4..9.
// ComplexGeneric: as RealGeneric with imaginary parts in [-0.3, 0.3] on the weights.
// SmallQ: real q in [0.2, 0.8]; Pochhammer products then use q itself as the base.
enum class Regime { RealGeneric, ComplexGeneric, SmallQ };

const char* regime_name(Regime regime);  // "real", "complex", "smallq"
std::optional<Regime> parse_regime(std::string_view name);

std::uint64_t fnv1a(std::string_view text);

// Parameter source for one (identity, trial, attempt). The stream depends only
// on those values and the suite seed, never on scheduling. Draws are exact
// binary doubles lifted to Real, so they serialize losslessly; call within a
// PrecisionScope at the working precision.
class Sampler {
 public:
  Sampler(Regime regime, std::uint64_t seed, std::string_view id, int trial, int attempt);

  Regime regime() const { return regime_; }

  Complex q();
  // Weight of leg i >= 1.
  Complex weight(int i);
  // Base for Pochhammer products: q in SmallQ, else a point of the annulus 0.2 <= |z| <= 0.8.
  Complex poch_base(const Complex& q);

  Real uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi);
  Complex annulus(double r_lo, double r_hi);

 private:
  Regime regime_;
  std::mt19937_64 rng_;
};

}  // namespace qsym
