#include "qsym/verma.hpp"

#include "qsym/errors.hpp"
#include "qsym/qarith.hpp"

#include <array>
#include <sstream>

namespace qsym {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::K: return "K";
    case Generator::Kinv: return "Kinv";
  }
  return "?";
}

namespace {

// q^{2(lambda - k)}, the K eigenvalue on e_{lambda-k}.
Complex k_eigen(const QContext& ctx, const Weight& lambda, int k) {
  return ctx.qpow(Complex(2) * (lambda - Complex(k)));
}

using Vec = std::map<int, Complex>;

Vec apply(const QContext& ctx, const TruncatedModule& m, bool dual, Generator g, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v) {
    if (auto t = act(ctx, m, dual, g, k)) {
      auto [it, fresh] = out.try_emplace(t->k, c * t->coeff);
      if (!fresh) it->second += c * t->coeff;
    }
  }
  return out;
}

Vec apply_word(const QContext& ctx, const TruncatedModule& m, bool dual,
               const std::vector<Generator>& word, int k) {
  Vec v{{k, Complex(1)}};
  // Rightmost generator acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(ctx, m, dual, *it, v);
  return v;
}

Vec scaled(Vec v, const Complex& s) {
  for (auto& [k, c] : v) c *= s;
  return v;
}

Vec combine(const Vec& a, const Vec& b, const Complex& sb) {
  Vec out = a;
  for (const auto& [k, c] : b) {
    auto [it, fresh] = out.try_emplace(k, c * sb);
    if (!fresh) it->second += c * sb;
  }
  return out;
}

Real max_entry(const Vec& a, const Vec& b) {
  Real m = 0;
  for (const auto* v : {&a, &b})
    for (const auto& [k, c] : *v) {
      Real r = abs(c);
      if (r > m) m = r;
    }
  return m;
}

void compare(Residual& res, const Vec& lhs, const Vec& rhs, const Real& scale,
             const std::string& label) {
  Vec keys = combine(lhs, rhs, Complex(0));
  for (const auto& kv : keys) {
    int k = kv.first;
    auto l = lhs.find(k);
    auto r = rhs.find(k);
    res.update(l == lhs.end() ? Complex() : l->second, r == rhs.end() ? Complex() : r->second,
               scale, [&] { return label + ", output depth " + std::to_string(k); });
  }
}

}  // namespace

std::optional<BasisTerm> act(const QContext& ctx, const TruncatedModule& module, bool dual,
                             Generator gen, int k) {
  if (k < 0 || k > module.depth)
    throw DomainError("act: depth " + std::to_string(k) + " outside 0.." +
                      std::to_string(module.depth));
  PrecisionScope scope(ctx.working_digits());
  const Weight& l = module.weight;
  switch (gen) {
    case Generator::K: return BasisTerm{k, k_eigen(ctx, l, k)};
    case Generator::Kinv: return BasisTerm{k, reciprocal(k_eigen(ctx, l, k))};
    case Generator::E:
      if (k == 0) return std::nullopt;
      if (!dual) return BasisTerm{k - 1, qnum(ctx, static_cast<long>(k))};
      return BasisTerm{k - 1, -(k_eigen(ctx, l, k) * qnum(ctx, Complex(2) * l - Complex(k - 1)))};
    case Generator::F:
      if (k + 1 > module.depth) return std::nullopt;
      if (!dual) return BasisTerm{k + 1, qnum(ctx, Complex(2) * l - Complex(k))};
      return BasisTerm{k + 1, -(reciprocal(k_eigen(ctx, l, k + 1)) * qnum(ctx, static_cast<long>(k + 1)))};
  }
  return std::nullopt;
}

Complex alpha(const QContext& ctx, const Weight& lambda, int k) {
  if (k < 0) throw DomainError("alpha: negative depth");
  if (k == 0) return Complex(1);
  PrecisionScope scope(ctx.working_digits());
  Complex e = Complex(static_cast<long>(k) * (k + 1)) - Complex(2 * k) * lambda;
  Complex v = ctx.qpow(e) * qfact(ctx, k) /
              qfalling_checked(ctx, Complex(2) * lambda, k, "[2 lambda - j] in alpha");
  return (k % 2) ? -v : v;
}

Complex shapovalov(const QContext& ctx, const Weight& lambda, int k, int k2) {
  if (k < 0 || k2 < 0) throw DomainError("shapovalov: negative depth");
  if (k != k2) return Complex();
  return alpha(ctx, lambda, k);
}

namespace {

// Shared factors (q - q^-1)^n/[n]! prod[k1 - j] prod[2 l2 - k2 - j].
Complex rmat_common(const QContext& ctx, const Weight& l2, int k1, int k2, int n) {
  Complex diff_pow(1);
  for (int j = 0; j < n; ++j) diff_pow *= ctx.q_minus_q_inv();
  return diff_pow * inv_qfact_reg(ctx, n) * qfact(ctx, k1) * inv_qfact_reg(ctx, k1 - n) *
         qfalling(ctx, Complex(2) * l2 - Complex(k2), n);
}

}  // namespace

Complex rmat_elem(const QContext& ctx, const Weight& l1, const Weight& l2, int k1, int k2, int n) {
  if (n < 0) throw DomainError("rmat_elem: negative shift");
  if (k1 < 0 || k2 < 0) throw DomainError("rmat_elem: negative depth");
  if (n > k1) return Complex();
  PrecisionScope scope(ctx.working_digits());
  Complex a1 = l1 - Complex(k1), a2 = l2 - Complex(k2);
  Complex e = Complex(2) * (a1 + Complex(n)) * (a2 - Complex(n)) +
              Complex(static_cast<long>(n) * (n - 1) / 2);
  return ctx.qpow(e) * rmat_common(ctx, l2, k1, k2, n);
}

Complex rmat_inv_elem(const QContext& ctx, const Weight& l1, const Weight& l2, int k1, int k2,
                      int n) {
  if (n < 0) throw DomainError("rmat_inv_elem: negative shift");
  if (k1 < 0 || k2 < 0) throw DomainError("rmat_inv_elem: negative depth");
  if (n > k1) return Complex();
  PrecisionScope scope(ctx.working_digits());
  Complex a1 = l1 - Complex(k1), a2 = l2 - Complex(k2);
  long nn = static_cast<long>(n) * (n - 1);
  Complex e = Complex(-2) * a1 * a2 + Complex(nn / 2 - nn);
  Complex v = ctx.qpow(e) * rmat_common(ctx, l2, k1, k2, n);
  return (n % 2) ? -v : v;
}

void TensorVector::add(const std::vector<int>& index, const Complex& c) {
  auto [it, fresh] = coeffs.try_emplace(index, c);
  if (!fresh) it->second += c;
}

TensorVector apply_coproduct(const QContext& ctx, Generator gen, const TensorVector& vec) {
  PrecisionScope scope(ctx.working_digits());
  TensorVector out;
  out.legs = vec.legs;
  const size_t legs = vec.legs.size();
  for (const auto& [index, c] : vec.coeffs) {
    if (index.size() != legs) throw DomainError("apply_coproduct: index rank mismatch");
    if (gen == Generator::K || gen == Generator::Kinv) {
      Complex f = c;
      for (size_t i = 0; i < legs; ++i) f *= act(ctx, vec.legs[i], false, gen, index[i])->coeff;
      out.add(index, f);
      continue;
    }
    for (size_t i = 0; i < legs; ++i) {
      auto t = act(ctx, vec.legs[i], false, gen, index[i]);
      if (!t) continue;
      Complex f = c * t->coeff;
      if (gen == Generator::E) {
        for (size_t j = i + 1; j < legs; ++j)
          f *= act(ctx, vec.legs[j], false, Generator::K, index[j])->coeff;
      } else {
        for (size_t j = 0; j < i; ++j)
          f *= act(ctx, vec.legs[j], false, Generator::Kinv, index[j])->coeff;
      }
      std::vector<int> next = index;
      next[i] = t->k;
      out.add(next, f);
    }
  }
  return out;
}

Residual check_module_relations(const QContext& ctx, const TruncatedModule& module, bool dual) {
  PrecisionScope scope(ctx.working_digits());
  using G = Generator;
  Residual res;
  const Complex q2 = ctx.q() * ctx.q();
  const Complex qm2 = ctx.q_inv() * ctx.q_inv();
  const std::string tag = dual ? "dual" : "primal";
  for (int k = 0; k + 1 <= module.depth; ++k) {
    std::string at = tag + " module, input depth " + std::to_string(k);
    Vec ke = apply_word(ctx, module, dual, {G::K, G::E}, k);
    Vec ek = scaled(apply_word(ctx, module, dual, {G::E, G::K}, k), q2);
    compare(res, ke, ek, max_entry(ke, ek), at + ", KE = q^2 EK");

    Vec kf = apply_word(ctx, module, dual, {G::K, G::F}, k);
    Vec fk = scaled(apply_word(ctx, module, dual, {G::F, G::K}, k), qm2);
    compare(res, kf, fk, max_entry(kf, fk), at + ", KF = q^-2 FK");

    Vec comm = combine(apply_word(ctx, module, dual, {G::E, G::F}, k),
                       apply_word(ctx, module, dual, {G::F, G::E}, k), Complex(-1));
    Vec cartan = scaled(combine(apply_word(ctx, module, dual, {G::K}, k),
                                apply_word(ctx, module, dual, {G::Kinv}, k), Complex(-1)),
                        ctx.inv_q_minus_q_inv());
    compare(res, comm, cartan, max_entry(comm, cartan), at + ", [E,F]");

    Vec kk = apply_word(ctx, module, dual, {G::K, G::Kinv}, k);
    compare(res, kk, Vec{{k, Complex(1)}}, Real(1), at + ", K K^-1 = 1");
  }
  return res;
}

Residual check_alpha_recursion(const QContext& ctx, const Weight& lambda, int kmax) {
  PrecisionScope scope(ctx.working_digits());
  Residual res;
  Complex prev = alpha(ctx, lambda, 0);
  for (int k = 1; k <= kmax; ++k) {
    Complex cur = alpha(ctx, lambda, k);
    Complex lhs = qnum(ctx, static_cast<long>(k)) * prev;
    Complex rhs = -(k_eigen(ctx, lambda, k) * qnum(ctx, Complex(2) * lambda - Complex(k - 1)) * cur);
    res.update(lhs, rhs, Real(0), [&] { return "k = " + std::to_string(k); });
    prev = cur;
  }
  return res;
}

Residual check_shapovalov_contravariance(const QContext& ctx, const Weight& lambda, int depth) {
  PrecisionScope scope(ctx.working_digits());
  using G = Generator;
  TruncatedModule m{lambda, depth};
  std::vector<Complex> a;
  for (int k = 0; k <= depth; ++k) a.push_back(alpha(ctx, lambda, k));
  auto pair = [&](const Vec& x, int k2) {
    auto it = x.find(k2);
    return it == x.end() ? Complex() : it->second * a[static_cast<size_t>(k2)];
  };
  auto pair_left = [&](int k, const Vec& y) {
    auto it = y.find(k);
    return it == y.end() ? Complex() : it->second * a[static_cast<size_t>(k)];
  };
  Residual res;
  for (int k = 0; k <= depth; ++k) {
    for (int k2 = 0; k2 <= depth; ++k2) {
      struct Case {
        const char* name;
        std::vector<G> a_word;
        std::vector<G> rho_word;
        int sign;
      };
      for (const Case& c : {Case{"E", {G::E}, {G::K, G::F}, -1}, Case{"F", {G::F}, {G::E, G::Kinv}, -1},
                            Case{"K", {G::K}, {G::K}, 1}}) {
        Complex lhs = pair(apply_word(ctx, m, false, c.a_word, k), k2);
        Complex rhs = pair_left(k, apply_word(ctx, m, false, c.rho_word, k2));
        if (c.sign < 0) rhs = -rhs;
        res.update(lhs, rhs, Real(0), [&] {
          return std::string("A = ") + c.name + ", k = " + std::to_string(k) +
                 ", k' = " + std::to_string(k2);
        });
      }
    }
  }
  return res;
}

Residual check_phi_intertwining(const QContext& ctx, const Weight& lambda, int kmax) {
  PrecisionScope scope(ctx.working_digits());
  using G = Generator;
  TruncatedModule m{lambda, kmax + 1};
  std::vector<Complex> a;
  for (int k = 0; k <= kmax + 1; ++k) a.push_back(alpha(ctx, lambda, k));
  Residual res;
  for (int k = 0; k <= kmax; ++k) {
    for (G g : {G::E, G::F, G::K}) {
      Vec image = apply_word(ctx, m, false, {g}, k);
      Vec lhs;
      for (const auto& [k2, c] : image) lhs[k2] = c * a[static_cast<size_t>(k2)];
      Vec rhs = scaled(apply_word(ctx, m, true, {g}, k), a[static_cast<size_t>(k)]);
      compare(res, lhs, rhs, Real(0),
              std::string("A = ") + generator_name(g) + ", k = " + std::to_string(k));
    }
  }
  return res;
}

namespace {

using Vec2 = std::map<std::array<int, 2>, Complex>;

template <class Elem>
Vec2 apply_r2(const Vec2& v, Elem&& elem) {
  Vec2 out;
  for (const auto& [idx, c] : v) {
    for (int n = 0; n <= idx[0]; ++n) {
      Complex f = c * elem(idx[0], idx[1], n);
      auto [it, fresh] = out.try_emplace({idx[0] - n, idx[1] + n}, f);
      if (!fresh) it->second += f;
    }
  }
  return out;
}

}  // namespace

Residual check_rmat_inverse(const QContext& ctx, const Weight& l1, const Weight& l2, int depth) {
  PrecisionScope scope(ctx.working_digits());
  auto r = [&](int k1, int k2, int n) { return rmat_elem(ctx, l1, l2, k1, k2, n); };
  auto ri = [&](int k1, int k2, int n) { return rmat_inv_elem(ctx, l1, l2, k1, k2, n); };
  Residual res;
  for (int k1 = 0; k1 <= depth; ++k1) {
    for (int k2 = 0; k2 <= depth; ++k2) {
      Vec2 e{{{k1, k2}, Complex(1)}};
      for (int order = 0; order < 2; ++order) {
        Vec2 mid = order == 0 ? apply_r2(e, r) : apply_r2(e, ri);
        Vec2 back = order == 0 ? apply_r2(mid, ri) : apply_r2(mid, r);
        // Scale: largest |R| |R^-1| product.
        Real scale = 1;
        for (const auto& [idx, c] : mid) {
          Real s = abs(c) * abs(order == 0 ? ri(idx[0], idx[1], 0) : r(idx[0], idx[1], 0));
          if (s > scale) scale = s;
        }
        for (const auto& [idx, c] : back) {
          Complex expect = (idx == std::array<int, 2>{k1, k2}) ? Complex(1) : Complex();
          res.update(c, expect, scale, [&] {
            std::ostringstream os;
            os << (order == 0 ? "R^-1 R" : "R R^-1") << ", input (" << k1 << "," << k2
               << "), output (" << idx[0] << "," << idx[1] << ")";
            return os.str();
          });
        }
      }
    }
  }
  return res;
}

namespace {

using Vec3 = std::map<std::array<int, 3>, Complex>;
using Mag3 = std::map<std::array<int, 3>, Real>;

// A triple tensor vector together with the absolute path sums behind each entry.
struct Tracked3 {
  Vec3 value;
  Mag3 magnitude;
};

// R^{lambda_i, lambda_j} acting on legs (i, j) of a triple tensor vector.
Tracked3 apply_r3(const QContext& ctx, const std::array<Weight, 3>& w, int i, int j,
                  const Tracked3& v) {
  const auto si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
  Tracked3 out;
  for (const auto& [idx, c] : v.value) {
    const Real& m = v.magnitude.at(idx);
    for (int n = 0; n <= idx[si]; ++n) {
      const Complex r = rmat_elem(ctx, w[si], w[sj], idx[si], idx[sj], n);
      std::array<int, 3> next = idx;
      next[si] -= n;
      next[sj] += n;
      Complex f = c * r;
      Real fm = m * abs(r);
      auto [it, fresh] = out.value.try_emplace(next, f);
      if (!fresh) it->second += f;
      auto [mt, mfresh] = out.magnitude.try_emplace(next, fm);
      if (!mfresh) mt->second += fm;
    }
  }
  return out;
}

}  // namespace

Residual check_yang_baxter_modules(const QContext& ctx, const Weight& l1, const Weight& l2,
                                   const Weight& l3, int depth) {
  if (depth < 0) throw DomainError("check_yang_baxter_modules: negative depth");
  PrecisionScope scope(ctx.working_digits());
  const std::array<Weight, 3> w{l1, l2, l3};
  Residual res;
  for (int k1 = 0; k1 <= depth; ++k1)
    for (int k2 = 0; k2 <= depth; ++k2)
      for (int k3 = 0; k3 <= depth; ++k3) {
        Tracked3 e{{{{k1, k2, k3}, Complex(1)}}, {{{k1, k2, k3}, Real(1)}}};
        Tracked3 lhs = apply_r3(ctx, w, 0, 1, apply_r3(ctx, w, 0, 2, apply_r3(ctx, w, 1, 2, e)));
        Tracked3 rhs = apply_r3(ctx, w, 1, 2, apply_r3(ctx, w, 0, 2, apply_r3(ctx, w, 0, 1, e)));
        // Scale: largest absolute path sum on either side.
        Real scale = 0;
        for (const auto* v : {&lhs, &rhs})
          for (const auto& kv : v->magnitude)
            if (kv.second > scale) scale = kv.second;
        Vec3 keys = lhs.value;
        for (const auto& kv : rhs.value) keys.try_emplace(kv.first, Complex());
        for (const auto& kv : keys) {
          auto l = lhs.value.find(kv.first);
          auto r = rhs.value.find(kv.first);
          res.update(l == lhs.value.end() ? Complex() : l->second,
                     r == rhs.value.end() ? Complex() : r->second, scale, [&] {
                       std::ostringstream os;
                       os << "input (" << k1 << "," << k2 << "," << k3 << "), output ("
                          << kv.first[0] << "," << kv.first[1] << "," << kv.first[2] << ")";
                       return os.str();
                     });
        }
      }
  return res;
}

}  // namespace qsym
