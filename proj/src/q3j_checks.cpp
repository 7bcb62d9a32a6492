#include "qsym/errors.hpp"
#include "qsym/q3j.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace qsym {

const char* q3j_identity_name(Q3jIdentity which) {
  switch (which) {
    case Q3jIdentity::RfVdw: return "RF-VDW";
    case Q3jIdentity::RfRec: return "RF-REC";
    case Q3jIdentity::NormHw: return "NORM-HW";
    case Q3jIdentity::Orth1: return "ORTH1";
    case Q3jIdentity::Orth2: return "ORTH2";
    case Q3jIdentity::Rmat1: return "RMAT1";
    case Q3jIdentity::Rmat2: return "RMAT2";
    case Q3jIdentity::Sym: return "SYM";
    case Q3jIdentity::Intertwine: return "INTERTWINE";
  }
  return "?";
}

namespace {

template <class... Args>
std::string describe(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

Real max_abs(std::initializer_list<const Complex*> values) {
  Real m = 0;
  for (const Complex* v : values) {
    Real a = abs(*v);
    if (a > m) m = a;
  }
  return m;
}

// Families CG(l1, l2, J) for J = 0..max_J, built on first use.
class FamilySet {
 public:
  FamilySet(const QContext& ctx, Weight l1, Weight l2)
      : ctx_(ctx), l1_(std::move(l1)), l2_(std::move(l2)) {}

  CGFamily& operator[](int J) {
    if (static_cast<size_t>(J) >= fams_.size()) fams_.resize(static_cast<size_t>(J) + 1);
    auto& f = fams_[static_cast<size_t>(J)];
    if (!f) f = std::make_unique<CGFamily>(ctx_, l1_, l2_, J);
    return *f;
  }

 private:
  const QContext& ctx_;
  Weight l1_, l2_;
  std::vector<std::unique_ptr<CGFamily>> fams_;
};

Residual check_formulas(const QContext& ctx, const Q3jCheckParams& p, bool against_recursion) {
  Residual res;
  for (int J = 0; J <= p.max_J; ++J) {
    CGFamily fam(ctx, p.l1, p.l2, J);
    std::unique_ptr<RecursionTable> table;
    if (against_recursion) table = std::make_unique<RecursionTable>(ctx, p.l1, p.l2, J, p.max_n);
    for (int n = 0; n <= p.max_n; ++n)
      for (int k1 = 0; k1 <= J + n; ++k1) {
        const int k2 = J + n - k1;
        const Complex& rf = fam.psi(k1, k2);
        Complex other = against_recursion ? table->at(k1, k2)
                                          : q3j_vdw(ctx, CGKey{p.l1, p.l2, J, k1, k2});
        res.update(rf, other, Real(0), [&] { return describe("J=", J, " k1=", k1, " k2=", k2); });
      }
  }
  return res;
}

Residual check_norm_hw(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  for (int J = 0; J <= p.max_J; ++J) {
    Complex sum;
    for (int k = 0; k <= J; ++k) {
      Complex h = q3j_hw(ctx, p.l1, p.l2, J, k);
      sum += h * h * alpha(ctx, p.l1, k) * alpha(ctx, p.l2, J - k);
    }
    res.update(sum, Complex(1), Real(1), [&] { return describe("J=", J); });
  }
  return res;
}

Residual check_orth1(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  FamilySet fams(ctx, p.l1, p.l2);
  for (int J = 0; J <= p.max_J; ++J)
    for (int Jp = 0; Jp <= p.max_J; ++Jp)
      for (int T = std::max(J, Jp); T <= p.max_depth; ++T) {
        Complex sum;
        Real scale = 1;
        for (int k1 = 0; k1 <= T; ++k1) {
          Complex t = fams[J].pi(k1, T - k1) * fams[Jp].psi(k1, T - k1);
          scale = std::max(scale, abs(t));
          sum += t;
        }
        res.update(sum, Complex(J == Jp ? 1 : 0), scale,
                   [&] { return describe("J=", J, " J'=", Jp, " total depth ", T); });
      }
  return res;
}

Residual check_orth2(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  FamilySet fams(ctx, p.l1, p.l2);
  for (int T = 0; T <= p.max_depth; ++T)
    for (int k1 = 0; k1 <= T; ++k1)
      for (int k1p = 0; k1p <= T; ++k1p) {
        Complex sum;
        Real scale = 1;
        for (int J = 0; J <= T; ++J) {
          Complex t = fams[J].pi(k1, T - k1) * fams[J].psi(k1p, T - k1p);
          scale = std::max(scale, abs(t));
          sum += t;
        }
        res.update(sum, Complex(k1 == k1p ? 1 : 0), scale, [&] {
          return describe("(k1,k2)=(", k1, ",", T - k1, ") (k1',k2')=(", k1p, ",", T - k1p, ")");
        });
      }
  return res;
}

Residual check_rmat1(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2;
  for (int J = 0; J <= p.max_J; ++J) {
    CGFamily fam(ctx, l1, l2, J), swapped(ctx, l2, l1, J);
    const Complex l = l1 + l2 - Complex(J);
    auto cas = [](const Complex& x) { return x * (x + Complex(1)); };
    Complex phase = ctx.qpow(cas(l) - cas(l1) - cas(l2));
    if (J % 2) phase = -phase;
    for (int n = 0; n <= p.max_n; ++n)
      for (int k1 = 0; k1 <= J + n; ++k1) {
        const int k2 = J + n - k1;
        Complex lhs;
        Real scale = 0;
        for (int m = 0; m <= k2; ++m) {
          Complex t = rmat_elem(ctx, l1, l2, k1 + m, k2 - m, m) * fam.psi(k1 + m, k2 - m);
          scale = std::max(scale, abs(t));
          lhs += t;
        }
        res.update(lhs, phase * swapped.psi(k2, k1), scale,
                   [&] { return describe("J=", J, " k1=", k1, " k2=", k2); });
      }
  }
  return res;
}

// (psi (x) 1) R^{lambda,l3} = R13 R23 (psi (x) 1) entrywise, plus the diagonal reduction.
Residual check_rmat2(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  const Weight &l1 = p.l1, &l2 = p.l2, &l3 = p.l3;
  for (int J = 0; J <= p.max_J; ++J) {
    CGFamily fam(ctx, l1, l2, J);
    const Weight l = l1 + l2 - Complex(J);
    for (int n = 0; n <= p.max_n; ++n)
      for (int k3in = 0; k3in <= p.max_n; ++k3in)
        for (int m = 0; m <= n; ++m) {
          const Complex r = rmat_elem(ctx, l, l3, n, k3in, m);
          const int total = J + n - m;
          for (int k1 = 0; k1 <= total; ++k1) {
            const int k2 = total - k1;
            Complex lhs = r * fam.psi(k1, k2);
            Complex rhs;
            Real scale = abs(lhs);
            for (int m2 = 0; m2 <= m; ++m2) {
              const int m1 = m - m2;
              Complex t = rmat_elem(ctx, l1, l3, k1 + m1, k3in + m2, m1) *
                          rmat_elem(ctx, l2, l3, k2 + m2, k3in, m2) * fam.psi(k1 + m1, k2 + m2);
              scale = std::max(scale, abs(t));
              rhs += t;
            }
            res.update(lhs, rhs, scale, [&] {
              return describe("J=", J, " input (", n, ",", k3in, ") output (", k1, ",", k2, ",",
                              k3in + m, ")");
            });
          }
        }
    for (int n = 0; n <= p.max_n; ++n)
      for (int k3 = 0; k3 <= p.max_n; ++k3)
        for (int k1 = 0; k1 <= J + n; ++k1) {
          const int k2 = J + n - k1;
          const Complex& psi = fam.psi(k1, k2);
          Complex lhs = rmat_elem(ctx, l, l3, n, k3, 0) * psi;
          Complex rhs = rmat_elem(ctx, l1, l3, k1, k3, 0) * rmat_elem(ctx, l2, l3, k2, k3, 0) * psi;
          res.update(lhs, rhs, Real(0), [&] {
            return describe("diagonal J=", J, " k1=", k1, " k2=", k2, " k3=", k3);
          });
        }
  }
  return res;
}

Residual check_sym(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  const QContext inv = ctx.inverted();
  PrecisionScope scope(ctx.working_digits());
  const Weight &l1 = p.l1, &l2 = p.l2;
  for (int J = 0; J <= p.max_J; ++J) {
    CGFamily fam(ctx, l1, l2, J), mirror(inv, l2, l1, J);
    const Complex l = l1 + l2 - Complex(J);
    for (int n = 0; n <= p.max_n; ++n)
      for (int k1 = 0; k1 <= J + n; ++k1) {
        const int k2 = J + n - k1;
        const Complex a1 = l1 - Complex(k1), a2 = l2 - Complex(k2), a = l - Complex(n);
        Complex e = Complex(k1) * (l1 + a1 - Complex(1)) + Complex(k2) * (l2 + a2 - Complex(1)) -
                    Complex(n) * (l + a - Complex(1));
        Complex sign = Complex(J % 2 ? -1 : 1);
        res.update(fam.psi(k1, k2), sign * ctx.qpow(e) * mirror.psi(k2, k1), Real(0),
                   [&] { return describe("psi J=", J, " k1=", k1, " k2=", k2); });
        res.update(fam.pi(k1, k2), sign * ctx.qpow(-e) * mirror.pi(k2, k1), Real(0),
                   [&] { return describe("pi J=", J, " k1=", k1, " k2=", k2); });
      }
  }
  return res;
}

void compare_tensors(Residual& res, const TensorVector& lhs, const TensorVector& rhs,
                     Real scale, const std::string& label) {
  std::map<std::vector<int>, std::pair<Complex, Complex>> merged;
  for (const auto& [idx, c] : lhs.coeffs) merged[idx].first = c;
  for (const auto& [idx, c] : rhs.coeffs) merged[idx].second = c;
  for (const auto& kv : merged) {
    Real m = max_abs({&kv.second.first, &kv.second.second});
    if (m > scale) scale = m;
  }
  for (const auto& [idx, pr] : merged)
    res.update(pr.first, pr.second, scale, [&] {
      return describe(label, ", output (", idx[0], ",", idx[1], ")");
    });
}

// Largest single contribution to Delta(g) v, the scale of any cancellation.
Real coproduct_term_scale(const QContext& ctx, Generator g, const TensorVector& v) {
  Real scale = 0;
  for (const auto& [idx, c] : v.coeffs) {
    TensorVector single;
    single.legs = v.legs;
    single.add(idx, c);
    for (const auto& kv : apply_coproduct(ctx, g, single).coeffs) {
      Real a = abs(kv.second);
      if (a > scale) scale = a;
    }
  }
  return scale;
}

Residual check_intertwine(const QContext& ctx, const Q3jCheckParams& p) {
  Residual res;
  const Generator gens[] = {Generator::E, Generator::F, Generator::K};
  for (int J = 0; J <= p.max_J; ++J) {
    CGFamily fam(ctx, p.l1, p.l2, J);
    const int W = p.window;
    const std::vector<TruncatedModule> legs{{p.l1, J + W + 1}, {p.l2, J + W + 1}};
    const TruncatedModule target{fam.l1() + fam.l2() - Complex(J), W + 1};

    auto psi_image = [&](int n) {
      TensorVector v;
      v.legs = legs;
      for (int k1 = 0; k1 <= J + n; ++k1) v.add({k1, J + n - k1}, fam.psi(k1, J + n - k1));
      return v;
    };

    // Delta(X) psi(e_n) = psi(X e_n).
    for (int n = 0; n <= W; ++n)
      for (Generator g : gens) {
        TensorVector lhs = apply_coproduct(ctx, g, psi_image(n));
        TensorVector rhs;
        rhs.legs = legs;
        if (auto t = act(ctx, target, false, g, n)) {
          for (const auto& [idx, c] : psi_image(t->k).coeffs) rhs.add(idx, c * t->coeff);
        }
        compare_tensors(res, lhs, rhs, coproduct_term_scale(ctx, g, psi_image(n)),
                        describe("psi J=", J, " X=", generator_name(g), " n=", n));
      }

    // pi(Delta(X) v) = X pi(v) on basis vectors v = e_{k1} (x) e_{k2}.
    for (int T = 0; T <= J + W; ++T)
      for (int k1 = 0; k1 <= T; ++k1)
        for (Generator g : gens) {
          const int k2 = T - k1;
          TensorVector v;
          v.legs = legs;
          v.add({k1, k2}, Complex(1));
          std::map<int, Complex> lhs, rhs;
          Real scale = 0;
          for (const auto& [idx, c] : apply_coproduct(ctx, g, v).coeffs) {
            const int n = idx[0] + idx[1] - J;
            if (n < 0) continue;
            Complex t = c * fam.pi(idx[0], idx[1]);
            scale = std::max(scale, abs(t));
            lhs[n] += t;
          }
          if (T >= J) {
            if (auto t = act(ctx, target, false, g, T - J))
              rhs[t->k] += t->coeff * fam.pi(k1, k2);
          }
          std::map<int, std::pair<Complex, Complex>> merged;
          for (const auto& [n, c] : lhs) merged[n].first = c;
          for (const auto& [n, c] : rhs) merged[n].second = c;
          for (const auto& [n, pr] : merged)
            res.update(pr.first, pr.second, scale, [&] {
              return describe("pi J=", J, " X=", generator_name(g), " input (", k1, ",", k2, ")");
            });
        }
  }
  return res;
}

}  // namespace

Residual verify_q3j_identity(const QContext& ctx, Q3jIdentity which, const Q3jCheckParams& params) {
  if (params.max_J < 0 || params.max_n < 0 || params.max_depth < 0 || params.window < 0)
    throw DomainError("verify_q3j_identity: negative range");
  PrecisionScope scope(ctx.working_digits());
  switch (which) {
    case Q3jIdentity::RfVdw: return check_formulas(ctx, params, false);
    case Q3jIdentity::RfRec: return check_formulas(ctx, params, true);
    case Q3jIdentity::NormHw: return check_norm_hw(ctx, params);
    case Q3jIdentity::Orth1: return check_orth1(ctx, params);
    case Q3jIdentity::Orth2: return check_orth2(ctx, params);
    case Q3jIdentity::Rmat1: return check_rmat1(ctx, params);
    case Q3jIdentity::Rmat2: return check_rmat2(ctx, params);
    case Q3jIdentity::Sym: return check_sym(ctx, params);
    case Q3jIdentity::Intertwine: return check_intertwine(ctx, params);
  }
  throw DomainError("verify_q3j_identity: unknown identity");
}

}  // namespace qsym
