#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"
#include "qsym/residual.hpp"
#include "qsym/verma.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

enum class CGVariant { Psi, Pi };

// Index set of a q3j symbol: lambda = l1 + l2 - J, a_i = l_i - k_i and the
// depth of e_a in M_lambda is n = k1 + k2 - J.
struct CGKey {
  Weight l1;
  Weight l2;
  int J = 0;
  int k1 = 0;
  int k2 = 0;
  CGVariant variant = CGVariant::Psi;

  int n() const { return k1 + k2 - J; }
  Weight lambda() const { return l1 + l2 - Complex(J); }
};

// Principal square root of [J]! prod_{j<J} [2 l1 - j][2 l2 - j] / [2 l + 2 + j].
Complex dd(const QContext& ctx, const Weight& l1, const Weight& l2, int J);

// Highest-weight symbol: a1 = l1 - k, a2 = l2 - J + k, a = lambda.
Complex q3j_hw(const QContext& ctx, const Weight& l1, const Weight& l2, int J, int k);

// Embedding symbols; exactly 0 outside the admissible strip.
Complex q3j_rf(const QContext& ctx, const CGKey& key);   // Racah-Fock sum
Complex q3j_vdw(const QContext& ctx, const CGKey& key);  // Van der Waerden sum

// Projection symbol alpha_{l1,k1} alpha_{l2,k2} / alpha_{lambda,n} times the embedding symbol.
Complex q3j_pi(const QContext& ctx, const CGKey& key);

// Dispatches on key.variant (Racah-Fock for psi).
Complex q3j(const QContext& ctx, const CGKey& key);

// Forward substitution of the three-term recursion from the highest-weight
// stratum n = 0 up to max_n.
class RecursionTable {
 public:
  RecursionTable(const QContext& ctx, const Weight& l1, const Weight& l2, int J, int max_n);

  int J() const { return J_; }
  int max_n() const { return static_cast<int>(strata_.size()) - 1; }
  // Entry at depths (k1, k2); 0 outside the strip, DomainError beyond max_n.
  Complex at(int k1, int k2) const;

 private:
  int J_;
  std::vector<std::vector<Complex>> strata_;  // strata_[n][k1]
};

Complex q3j_rec_oracle(const QContext& ctx, const CGKey& key);

// Memoized psi/pi symbols of one (l1, l2, J) family. Single-threaded.
class CGFamily {
 public:
  CGFamily(const QContext& ctx, Weight l1, Weight l2, int J);

  const Weight& l1() const { return l1_; }
  const Weight& l2() const { return l2_; }
  int J() const { return J_; }

  const Complex& psi(int k1, int k2);
  const Complex& pi(int k1, int k2);

 private:
  const Complex& alpha_cached(std::map<int, Complex>& cache, const Weight& w, int k);

  const QContext* ctx_;
  Weight l1_, l2_, lambda_;
  int J_;
  Complex dd_;
  std::map<std::pair<int, int>, Complex> psi_, pi_;
  std::map<int, Complex> alpha1_, alpha2_, alpha_;
};

enum class Q3jIdentity { RfVdw, RfRec, NormHw, Orth1, Orth2, Rmat1, Rmat2, Sym, Intertwine };

const char* q3j_identity_name(Q3jIdentity which);

struct Q3jCheckParams {
  Weight l1;
  Weight l2;
  Weight l3;         // third leg, RMAT2 only
  int max_J = 5;     // defects J (and J') range over 0..max_J
  int max_n = 6;     // depth of e_a in M_lambda
  int max_depth = 6; // total depth k1 + k2 for the orthogonality sums
  int window = 5;    // INTERTWINE: depths of M_lambda checked
};

// Worst residual of one q3j identity over every entry in the parameter box.
Residual verify_q3j_identity(const QContext& ctx, Q3jIdentity which, const Q3jCheckParams& params);

}  // namespace qsym
