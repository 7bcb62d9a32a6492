#pragma once

#include "qsym/complex.hpp"

#include <string>
#include <utility>

namespace qsym {

// Worst-case discrepancy collected over the entries of an identity check.
//
// rel = |lhs - rhs| / max(|lhs|, |rhs|, scale). The caller picks `scale`:
// 1 for identities whose right side is a Kronecker delta, the largest entry of
// the compared vector for entrywise operator identities, the largest summand
// for sums that may cancel to zero, and 0 for pure relative comparisons.
struct Residual {
  Real abs_err = 0;
  Real rel_err = 0;
  std::string where;
  long entries = 0;

  // Records one comparison; `describe` is only invoked for a new worst entry.
  template <class Describe>
  void update(const Complex& lhs, const Complex& rhs, const Real& scale, Describe&& describe) {
    ++entries;
    Real diff = abs(lhs - rhs);
    Real denom = abs(lhs);
    Real r = abs(rhs);
    if (r > denom) denom = r;
    if (scale > denom) denom = scale;
    Real rel = denom > 0 ? Real(diff / denom) : Real(diff);
    if (diff > abs_err) abs_err = diff;
    if (rel > rel_err || (rel == rel_err && where.empty() && rel > 0)) {
      rel_err = rel;
      where = std::forward<Describe>(describe)();
    }
  }

  void update(const Complex& lhs, const Complex& rhs, const Real& scale) {
    update(lhs, rhs, scale, [] { return std::string(); });
  }

  void merge(const Residual& other) {
    entries += other.entries;
    if (other.abs_err > abs_err) abs_err = other.abs_err;
    if (other.rel_err > rel_err) {
      rel_err = other.rel_err;
      where = other.where;
    }
  }
};

}  // namespace qsym
