#include "qsym/registry.hpp"

#include "qsym/basic_identities.hpp"
#include "qsym/q3j.hpp"
#include "qsym/q6j.hpp"
#include "qsym/verma.hpp"

namespace qsym {

namespace {

constexpr int kBasicTrials = 25;
constexpr int kTrials = 10;

class Recorder {
 public:
  explicit Recorder(const QContext& ctx) : digits_(ctx.working_digits()) {}
  const Complex& operator()(std::string name, const Complex& value) {
    params_.emplace_back(std::move(name), to_string(value, digits_));
    return value;
  }
  void note(std::string name, std::string value) {
    params_.emplace_back(std::move(name), std::move(value));
  }
  TrialOutcome finish(Residual residual) {
    return TrialOutcome{std::move(residual), std::move(params_)};
  }

 private:
  int digits_;
  ParamList params_;
};

// Generic complex parameters a, b in the box [1.5, 3] x [-1, 1], c in [-1, 1]^2,
// so |c/(ab)| < 1; integer tuples in 0..10.
Evaluator basic(BasicIdentity which) {
  return [which](const QContext& ctx, Sampler& s) {
    Recorder rec(ctx);
    BasicParams p;
    p.a = rec("a", s.box(1.5, 3.0, -1.0, 1.0));
    p.b = rec("b", s.box(1.5, 3.0, -1.0, 1.0));
    p.c = rec("c", s.box(-1.0, 1.0, -1.0, 1.0));
    p.base = rec("base", s.poch_base(ctx.q()));
    for (int i = 0; i < 24; ++i)
      p.tuples.push_back({s.integer(0, 10), s.integer(0, 10), s.integer(0, 10)});
    std::string joined;
    for (size_t i = 0; i < p.tuples.size(); ++i) {
      const auto& t = p.tuples[i];
      if (i) joined += ' ';
      joined += std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' + std::to_string(t[2]);
    }
    rec.note("integers", joined);
    return rec.finish(verify_basic_identity(ctx, which, p));
  };
}

template <class Check>
Evaluator weights(int count, Check check) {
  return [count, check](const QContext& ctx, Sampler& s) {
    Recorder rec(ctx);
    std::vector<Weight> w;
    for (int i = 1; i <= count; ++i) w.push_back(rec("lambda" + std::to_string(i), s.weight(i)));
    return rec.finish(check(ctx, w));
  };
}

Evaluator q3j_check(Q3jIdentity which, int max_J, int max_n, int max_depth = 6) {
  return weights(3, [=](const QContext& ctx, const std::vector<Weight>& w) {
    Q3jCheckParams p;
    p.l1 = w[0];
    p.l2 = w[1];
    p.l3 = w[2];
    p.max_J = max_J;
    p.max_n = max_n;
    p.max_depth = max_depth;
    return verify_q3j_identity(ctx, which, p);
  });
}

Evaluator q6j_check(Q6jIdentity which, int max_defect) {
  return weights(4, [=](const QContext& ctx, const std::vector<Weight>& w) {
    Q6jCheckParams p;
    p.l1 = w[0];
    p.l2 = w[1];
    p.l3 = w[2];
    p.l4 = w[3];
    p.max_defect = max_defect;
    return verify_q6j_identity(ctx, which, p);
  });
}

std::vector<IdentityDescriptor> build() {
  using A = BasicIdentity;
  using T = Q3jIdentity;
  using S = Q6jIdentity;
  std::vector<IdentityDescriptor> r;
  auto add = [&r](std::string id, std::string ref, int trials, Evaluator e) {
    r.push_back(IdentityDescriptor{std::move(id), std::move(ref), trials, std::move(e)});
  };

  add("QBINREC", "q-Pascal recursion for Gaussian binomials, both signs of the exponent",
      kBasicTrials, basic(A::QBinRec));
  add("QBID1", "alternating binomial sum collapsing to a Kronecker delta, both signs",
      kBasicTrials, basic(A::QBid1));
  add("QBID2", "q-Vandermonde convolution, integer and continued forms, both signs",
      kBasicTrials, basic(A::QBid2));
  add("QBID3", "shifted factorial convolution, integer and continued forms",
      kBasicTrials, basic(A::QBid3));
  add("QBID4", "alternating q-Vandermonde (Saalschutz type) sum, both signs",
      kBasicTrials, basic(A::QBid4));
  add("QPFID2", "bracket pair times a falling product of q-numbers", kBasicTrials,
      basic(A::QPfid2));
  add("QPFID3", "bracket pair divided by a rising product of q-numbers", kBasicTrials,
      basic(A::QPfid3));
  add("ID1", "finite times infinite Pochhammer product equals the infinite product",
      kBasicTrials, basic(A::Id1));
  add("ID2", "reversal formula for the finite Pochhammer symbol", kBasicTrials,
      basic(A::Id2));
  add("QID1", "quantum factorial as a q^2-Pochhammer symbol", kBasicTrials,
      basic(A::QId1));
  add("QID2", "falling product of q-numbers as a q^2-Pochhammer symbol", kBasicTrials,
      basic(A::QId2));
  add("HID1", "q-Gauss summation of 2phi1 at z = c/(ab)", kTrials, basic(A::HId1));

  add("RECMOR", "three-term recursion of the Shapovalov diagonal alpha", kTrials,
      weights(1, [](const QContext& ctx, const std::vector<Weight>& w) {
        return check_alpha_recursion(ctx, w[0], 12);
      }));
  add("MODULE-REL", "defining relations of the quantum group on Verma modules and duals",
      kTrials, weights(1, [](const QContext& ctx, const std::vector<Weight>& w) {
        Residual r = check_module_relations(ctx, TruncatedModule{w[0], 8}, false);
        r.merge(check_module_relations(ctx, TruncatedModule{w[0], 8}, true));
        return r;
      }));
  add("SHAP-CONTRA", "contravariance of the Shapovalov form", kTrials,
      weights(1, [](const QContext& ctx, const std::vector<Weight>& w) {
        return check_shapovalov_contravariance(ctx, w[0], 8);
      }));
  add("PHI-INTERTWINE", "Shapovalov map from the Verma module to its dual intertwines",
      kTrials, weights(1, [](const QContext& ctx, const std::vector<Weight>& w) {
        return check_phi_intertwining(ctx, w[0], 8);
      }));
  add("RMAT-INV", "R-matrix times its inverse is the identity on weight lines", kTrials,
      weights(2, [](const QContext& ctx, const std::vector<Weight>& w) {
        return check_rmat_inverse(ctx, w[0], w[1], 4);
      }));
  add("YBR-MODULE", "Yang-Baxter relation for the R-matrix on three Verma modules", 5,
      weights(3, [](const QContext& ctx, const std::vector<Weight>& w) {
        return check_yang_baxter_modules(ctx, w[0], w[1], w[2], 4);
      }));

  add("RF-VDW", "Racah-Fock and Van der Waerden sums for the q3j symbol agree", kTrials,
      q3j_check(T::RfVdw, 5, 6));
  add("RF-REC", "Racah-Fock sum agrees with the three-term recursion", kTrials,
      q3j_check(T::RfRec, 5, 6));
  add("NORM-HW", "normalization of the highest-weight q3j symbols", kTrials,
      q3j_check(T::NormHw, 5, 6));
  add("ORTH1", "orthogonality of q3j symbols summed over the tensor basis", kTrials,
      q3j_check(T::Orth1, 4, 6, 6));
  add("ORTH2", "completeness of q3j symbols summed over defects", kTrials,
      q3j_check(T::Orth2, 4, 6, 6));
  add("RMAT1", "R-matrix acting on a q3j embedding is a phase times the swapped embedding",
      kTrials, q3j_check(T::Rmat1, 4, 4));
  add("RMAT2", "R-matrix through a q3j embedding on three legs, full and reduced forms",
      kTrials, q3j_check(T::Rmat2, 3, 3));
  add("SYM", "symmetry of the q3j symbol under swapping legs and inverting q", kTrials,
      q3j_check(T::Sym, 4, 4));
  add("INTERTWINE", "q3j embeddings and projections commute with E, F and K", kTrials,
      q3j_check(T::Intertwine, 3, 5));

  add("Q6J-ORACLE", "closed single-sum q6j formula against a contraction of q3j symbols",
      kTrials, q6j_check(S::ClosedOracle, 4));
  add("STID1", "q3j projection contracted with two embeddings gives the q6j symbol times an embedding", kTrials,
      q6j_check(S::Stid1, 3));
  add("STID2", "recoupling of two q3j embeddings as a sum over q6j symbols", kTrials,
      q6j_check(S::Stid2, 3));
  add("STID3", "R-matrix on legs 2 and 3 of a recoupled embedding", kTrials,
      q6j_check(S::Stid3, 3));
  add("QSORTH", "orthogonality of q6j symbols", kTrials, q6j_check(S::QsOrth, 3));
  add("QSRACAH", "Racah identity relating q6j symbols through R-matrix phases", kTrials,
      q6j_check(S::QsRacah, 3));
  add("QSBE", "pentagon identity (Biedenharn-Elliott) for q6j symbols", kTrials,
      q6j_check(S::QsBE, 3));
  add("QSYB", "Yang-Baxter identity for q6j symbols with R-matrix phases", kTrials,
      q6j_check(S::QsYB, 3));
  add("LEMMA2", "step 2 summation lemma in the derivation of the closed q6j formula", kTrials, q6j_check(S::Lemma2, 3));
  add("LEMMA3", "step 3 summation lemma in the derivation of the closed q6j formula", kTrials, q6j_check(S::Lemma3, 3));
  add("LEMMA5", "step 5 summation lemma in the derivation of the closed q6j formula", kTrials,
      q6j_check(S::Lemma5, 3));
  add("LEMMA6", "step 6 summation lemma in the derivation of the closed q6j formula", kTrials,
      q6j_check(S::Lemma6, 3));
  add("LEMMA7", "step 7 summation lemma in the derivation of the closed q6j formula", kTrials,
      q6j_check(S::Lemma7, 3));
  return r;
}

}  // namespace

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> entries = build();
  return entries;
}

const IdentityDescriptor* find_identity(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

}  // namespace qsym
