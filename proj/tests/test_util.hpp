#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"

#include <gtest/gtest.h>

#include <string>

namespace qsym::test {

inline Complex C(const char* re, const char* im = "0") { return Complex(Real(re), Real(im)); }

inline ::testing::AssertionResult Near(const Complex& got, const Complex& want, const Real& rel) {
  Real diff = abs(got - want);
  Real scale = abs(want);
  if (scale < 1) scale = 1;
  if (diff <= rel * scale) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << to_string(got, 30) << ", want "
                                       << to_string(want, 30) << ", diff " << to_string(diff, 5);
}

// Precision scope plus a context at q, shared by the fixtures.
class QTest : public ::testing::Test {
 protected:
  explicit QTest(const char* q = "2", int digits = 64)
      : scope_(digits + QContext::kGuardDigits), ctx_(C(q), digits), tol_(ctx_.rel_tolerance()) {}
  const QContext& ctx() const { return ctx_; }
  const Real& tol() const { return tol_; }

 private:
  PrecisionScope scope_;
  QContext ctx_;
  Real tol_;
};

}  // namespace qsym::test
