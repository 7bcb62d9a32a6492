#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"
#include "qsym/residual.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qsym {

// Highest weight lambda; the module M_lambda has weight vectors e_{lambda-k}.
using Weight = Complex;

enum class Generator { E, F, K, Kinv };

const char* generator_name(Generator g);

struct TruncatedModule {
  Weight weight;
  int depth = 0;  // basis e_{lambda-k}, k = 0..depth
};

struct BasisTerm {
  int k;
  Complex coeff;
};

// Image of the basis vector of depth k under a generator, for M_lambda
// (dual = false) or its dual (dual = true). E lowers the depth, F raises it;
// images beyond the truncation are dropped.
std::optional<BasisTerm> act(const QContext& ctx, const TruncatedModule& module, bool dual,
                             Generator gen, int k);

// Shapovalov diagonal alpha_{lambda,k} = (-1)^k q^{k(k-2l+1)} [k]! / prod_{j<k} [2l-j].
Complex alpha(const QContext& ctx, const Weight& lambda, int k);

// (e_{lambda-k}, e_{lambda-k2}) = alpha_{lambda,k} delta_{k,k2}.
Complex shapovalov(const QContext& ctx, const Weight& lambda, int k, int k2);

// Coefficient of e_{a1+n} (x) e_{a2-n} in R(e_{a1} (x) e_{a2}), a_i = lambda_i - k_i.
// Output depths are (k1 - n, k2 + n).
Complex rmat_elem(const QContext& ctx, const Weight& l1, const Weight& l2, int k1, int k2, int n);
Complex rmat_inv_elem(const QContext& ctx, const Weight& l1, const Weight& l2, int k1, int k2,
                      int n);

// Finitely supported vector in a tensor product of truncated primal modules.
struct TensorVector {
  std::vector<TruncatedModule> legs;
  std::map<std::vector<int>, Complex> coeffs;

  void add(const std::vector<int>& index, const Complex& c);
};

// Action of the iterated coproduct of `gen` on a tensor vector:
// E -> sum_i 1..1 E K..K, F -> sum_i K^-1..K^-1 F 1..1, K -> K..K.
TensorVector apply_coproduct(const QContext& ctx, Generator gen, const TensorVector& vec);

// Module-level checks; each returns the worst residual over the entries it compares.

// KE = q^2 EK, KF = q^-2 FK, [E,F] = (K - K^-1)/(q - q^-1) on input depths <= depth - 1.
Residual check_module_relations(const QContext& ctx, const TruncatedModule& module, bool dual);

// [k] alpha_{k-1} + q^{2(l-k)} [2l-k+1] alpha_k = 0 for 1 <= k <= kmax.
Residual check_alpha_recursion(const QContext& ctx, const Weight& lambda, int kmax);

// (A x, y) = (x, rho(A) y) for A in {E, F, K} with rho(E) = -KF, rho(F) = -EK^-1.
Residual check_shapovalov_contravariance(const QContext& ctx, const Weight& lambda, int depth);

// phi(A e_k) = A phi(e_k), phi(e_k) = alpha_{lambda,k} f_k, for A in {E, F, K}.
Residual check_phi_intertwining(const QContext& ctx, const Weight& lambda, int kmax);

// R^{-1} R = 1 and R R^{-1} = 1 on every weight line of total depth <= 2 depth.
Residual check_rmat_inverse(const QContext& ctx, const Weight& l1, const Weight& l2, int depth);

// R12 R13 R23 = R23 R13 R12 with R_ij = R^{lambda_i, lambda_j}, compared entrywise
// for every input with all depths <= depth. R preserves total depth, so both
// sides are computed exactly.
Residual check_yang_baxter_modules(const QContext& ctx, const Weight& l1, const Weight& l2,
                                   const Weight& l3, int depth);

}  // namespace qsym
