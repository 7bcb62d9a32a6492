#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"
#include "qsym/residual.hpp"

#include <array>
#include <vector>

namespace qsym {

enum class BasicIdentity {
  QBinRec,  // Gaussian binomial recursion, both signs
  QBid1,
  QBid2,
  QBid3,
  QBid4,
  QPfid2,   // <b+d|b> prod_{j<c} [b-j] = <b+d|b-c>
  QPfid3,   // <b+d|b> / prod_{j=1..c} [b+j] = <b+d|b+c>
  Id1,      // (a;base)_n (a base^n;base)_inf = (a;base)_inf
  Id2,      // shift identity for (a;base)_{n-k}
  QId1,     // [k]! as a q^2-Pochhammer symbol
  QId2,     // prod_{j<k} [J-j] as a q^2-Pochhammer symbol
  HId1,     // 2phi1 summation at z = c/(ab)
};

const char* basic_identity_name(BasicIdentity which);

struct BasicParams {
  // Generic complex parameters, used where a statement allows continuation.
  Complex a;
  Complex b;
  Complex c;
  // Pochhammer base, |base| < 1 for the infinite products.
  Complex base;
  // Raw integer draws in 0..10; each identity folds them into its own admissible range.
  std::vector<std::array<int, 3>> tuples;
};

Residual verify_basic_identity(const QContext& ctx, BasicIdentity which,
                                  const BasicParams& params);

}  // namespace qsym
