#pragma once

#include "qsym/complex.hpp"
#include "qsym/context.hpp"
#include "qsym/residual.hpp"
#include "qsym/verma.hpp"

namespace qsym {

// q6j index set: three weights and the defects of l12 = l1 + l2 - J12,
// l23 = l2 + l3 - J23 and l123 = l1 + l2 + l3 - J123.
struct SixJKey {
  Weight l1;
  Weight l2;
  Weight l3;
  int J12 = 0;
  int J23 = 0;
  int J123 = 0;

  Weight l12() const { return l1 + l2 - Complex(J12); }
  Weight l23() const { return l2 + l3 - Complex(J23); }
  Weight l123() const { return l1 + l2 + l3 - Complex(J123); }
  // 0 <= J12 <= J123 and 0 <= J23 <= J123.
  bool valid() const { return 0 <= J12 && J12 <= J123 && 0 <= J23 && J23 <= J123; }
};

// Closed single-sum formula. DomainError for keys outside the decomposition.
Complex q6j_closed(const QContext& ctx, const SixJKey& key);

// Contraction of three q3j symbols over k = 0..J123 - J12, divided by the
// boundary symbol; built only from q3j and Shapovalov evaluations.
Complex q6j_contraction_oracle(const QContext& ctx, const SixJKey& key);

enum class Q6jIdentity {
  ClosedOracle,
  Stid1,
  Stid2,
  Stid3,
  QsOrth,
  QsRacah,
  QsBE,
  QsYB,
  Lemma2,
  Lemma3,
  Lemma5,
  Lemma6,
  Lemma7,
};

const char* q6j_identity_name(Q6jIdentity which);

struct Q6jCheckParams {
  Weight l1;
  Weight l2;
  Weight l3;
  Weight l4;            // fourth weight, pentagon and Yang-Baxter only
  int max_defect = 3;   // bound on J123 (J1234 for four weights)
  int stid_depth = 3;   // external depths for the contraction identities
  int max_integer = 5;  // integer parameters of the summation lemmas
};

Residual verify_q6j_identity(const QContext& ctx, Q6jIdentity which, const Q6jCheckParams& params);

}  // namespace qsym
