#pragma once

// Randomized iff harnesses for the six assembled-structure equivalences:
// smash product, smash coproduct, biproduct, Rota-Baxter semidirect product
// and the dendriform / pre-Lie direct sums. Each harness draws seeded
// candidates at dim(A) = dim(M) = 2, filters on the statement's ambient
// hypotheses, and verifies that validity of the assembled object is exactly
// equivalent to the stated precondition set.

#include <random>
#include <string>

#include "catalog.hpp"

namespace harness {

using namespace bihom;

struct Tally {
  int trials = 0;        // accepted (ambient-passing) samples
  int both_true = 0;     // assembled valid and preconditions hold
  int both_false = 0;    // assembled invalid and preconditions fail
  int discrepancies = 0; // equivalence violated (must stay 0)
  std::uint64_t seed = 0;              // seed of the sample being recorded
  std::uint64_t first_bad_seed = ~0ULL;  // reproducer for the first discrepancy
  void record(bool assembled_ok, bool preconditions_ok) {
    ++trials;
    if (assembled_ok != preconditions_ok) {
      if (discrepancies == 0) first_bad_seed = seed;
      ++discrepancies;
    } else if (assembled_ok)
      ++both_true;
    else
      ++both_false;
  }
  bool covered(int want) const {
    return trials >= want && both_true > 0 && both_false > 0 && discrepancies == 0;
  }
};

struct Gen {
  std::mt19937_64 g;
  explicit Gen(std::uint64_t seed) : g(seed) {}
  int next(int n) { return int(g() % std::uint64_t(n)); }
  R val() { return R(next(5) - 2); }
  Tensor3<R> tensor(int d1, int d2, int d3, int nnz_max = 3) {
    Tensor3<R> t(d1, d2, d3);
    int nnz = next(nnz_max + 1);
    for (int s = 0; s < nnz; ++s) t(next(d1), next(d2), next(d3)) = val();
    return t;
  }
  Mat<R> map2() {
    int shape = next(3);
    Mat<R> m(2, 2);
    if (shape == 0) return Mat<R>::identity(2);
    if (shape == 1) {
      m(0, 0) = val();
      m(1, 1) = val();
      return m;
    }
    int nnz = 1 + next(2);
    for (int s = 0; s < nnz; ++s) m(next(2), next(2)) = val();
    return m;
  }
  std::pair<Mat<R>, Mat<R>> commuting_pair() {
    Mat<R> a = map2();
    Mat<R> b = val() * Mat<R>::identity(2) + val() * a;
    return {a, b};
  }
};

// The smash product on A + M is BiHom-associative iff A is a
// BiHom-associative algebra and M is a bimodule algebra over it.
inline void trial_smash_product(std::uint64_t seed, Tally& tally) {
  Gen gen(seed);
  BimoduleData<R> M;
  auto [aA, bA] = gen.commuting_pair();
  auto [aM, bM] = gen.commuting_pair();
  int source = gen.next(3);
  if (source == 0) {
    M = make_regular_bimodule(make_kx(2));
  } else if (source == 1) {
    M = make_regular_bimodule(make_kx(2));
    Tensor3<R>* slots[4] = {&M.algebra.mu, &*M.left, &*M.right, &*M.muM};
    (*slots[gen.next(4)])(gen.next(2), gen.next(2), gen.next(2)) += R(1);
  } else {
    M.algebra = BiHomAlgebra<R>{2, gen.tensor(2, 2, 2), aA, bA, {}};
    M.mdim = 2;
    M.left = gen.tensor(2, 2, 2);
    M.right = gen.tensor(2, 2, 2);
    M.muM = gen.tensor(2, 2, 2);
    M.alphaM = aM;
    M.betaM = bM;
  }
  bool assembled = check_bihom_algebra(assemble_product(M)).passed();
  bool pre = check_bihom_algebra(M.algebra).passed() && check_bimodule(M).passed();
  tally.record(assembled, pre);
}

// Dual statement for the smash coproduct.
inline void trial_smash_coproduct(std::uint64_t seed, Tally& tally) {
  Gen gen(seed ^ 0xc0c0c0c0ULL);
  BicomoduleData<R> M;
  auto [pC, oC] = gen.commuting_pair();
  auto [pM, oM] = gen.commuting_pair();
  int source = gen.next(3);
  if (source == 0) {
    M = make_regular_bicomodule(make_dual_kx(2));
  } else if (source == 1) {
    M = make_regular_bicomodule(make_dual_kx(2));
    Tensor3<R>* slots[4] = {&M.coalgebra.delta, &*M.rho, &*M.phi, &*M.deltaM};
    (*slots[gen.next(4)])(gen.next(2), gen.next(2), gen.next(2)) += R(1);
  } else {
    M.coalgebra = BiHomCoalgebra<R>{2, gen.tensor(2, 2, 2), pC, oC, {}};
    M.mdim = 2;
    M.rho = gen.tensor(2, 2, 2);
    M.phi = gen.tensor(2, 2, 2);
    M.deltaM = gen.tensor(2, 2, 2);
    M.psiM = pM;
    M.omegaM = oM;
  }
  bool assembled = check_bihom_coalgebra(assemble_coproduct(M)).passed();
  bool pre = check_bihom_coalgebra(M.coalgebra).passed() && check_bicomodule(M).passed();
  tally.record(assembled, pre);
}

// Valid biproduct family: over the canonical left bialgebra, M = A with the
// regular actions, rho = 0, phi = Delta, zero muM / deltaM.
inline HopfBimodule<R> biproduct_family(const R& lambda, const R& scale_psiM) {
  InfBialgebra<R> B = make_canonical(2, lambda, true);
  HopfBimodule<R> H;
  H.bialgebra = B;
  H.mdim = 2;
  H.left = B.mu;
  H.right = B.mu;
  H.rho = Tensor3<R>(2, 2, 2);
  H.phi = B.delta;
  H.alphaM = Mat<R>::identity(2);
  H.betaM = Mat<R>::identity(2);
  H.psiM = scale_psiM * Mat<R>::identity(2);
  H.omegaM = Mat<R>::identity(2);
  H.muM = Tensor3<R>(2, 2, 2);
  H.deltaM = Tensor3<R>(2, 2, 2);
  return H;
}

// Biproduct: given the ambient hypotheses (valid bialgebra, bimodule
// algebra, bicomodule coalgebra), the assembled A + M structure is a valid
// bialgebra iff conditions (a)-(d) hold. Returns false if the sample was
// rejected by the ambient filter.
inline bool trial_biproduct(std::uint64_t seed, Tally& tally) {
  Gen gen(seed ^ 0xb1b1b1b1ULL);
  const R lambdas[5] = {R(0), R(1), R(-1), R(2), R(3)};
  HopfBimodule<R> H;
  int source = gen.next(3);
  if (source == 0) {
    H = biproduct_family(lambdas[gen.next(5)], R(1 + gen.next(3)));
  } else if (source == 1) {
    H = biproduct_family(lambdas[gen.next(5)], R(1));
    Tensor3<R>* slots[6] = {&H.left, &H.right, &H.rho, &H.phi, &*H.muM, &*H.deltaM};
    (*slots[gen.next(6)])(gen.next(2), gen.next(2), gen.next(2)) += R(1);
  } else {
    H.bialgebra = make_canonical(2, lambdas[gen.next(5)], true);
    H.mdim = 2;
    H.left = gen.tensor(2, 2, 2);
    H.right = gen.tensor(2, 2, 2);
    H.rho = gen.tensor(2, 2, 2);
    H.phi = gen.tensor(2, 2, 2);
    auto [aM, bM] = gen.commuting_pair();
    H.alphaM = aM;
    H.betaM = bM;
    H.psiM = gen.val() * Mat<R>::identity(2) + gen.val() * aM;
    H.omegaM = gen.val() * Mat<R>::identity(2) + gen.val() * aM;
    H.muM = gen.tensor(2, 2, 2);
    H.deltaM = gen.tensor(2, 2, 2);
  }
  bool ambient = check_inf_bialgebra(H.bialgebra).passed() &&
                 check_bimodule(bimodule_part(H)).passed() &&
                 check_bicomodule(bicomodule_part(H)).passed();
  if (!ambient) return false;
  bool assembled = check_inf_bialgebra(assemble_biproduct(H)).passed();
  bool pre = check_hopf_bimodule(H).passed() &&
             check_module_coalgebra(H.bialgebra, H.left, H.right, H.alphaM, H.betaM,
                                    *H.deltaM, H.psiM, H.omegaM)
                 .passed() &&
             check_comodule_algebra(H.bialgebra, H.rho, H.phi, H.psiM, H.omegaM, *H.muM,
                                    H.alphaM, H.betaM)
                 .passed() &&
             check_yd(H).passed();
  tally.record(assembled, pre);
  return true;
}

// Semidirect product: with a fixed valid Rota-Baxter algebra and
// commuting alphaM/betaM/RM, the sum is a Rota-Baxter algebra iff M is a
// Rota-Baxter bimodule.
inline void trial_rb_semidirect(std::uint64_t seed, Tally& tally) {
  Gen gen(seed ^ 0x5d5d5d5dULL);
  const R lambdas[5] = {R(0), R(1), R(-1), R(2), R(3)};
  RotaBaxterData<R> rb;
  rb.algebra = make_kx(2);
  R lam = lambdas[gen.next(5)];
  rb.lambda = lam;
  rb.RA = gen.next(2) == 0 ? Mat<R>(2, 2) : (R(0) - lam) * Mat<R>::identity(2);

  RotaBaxterModule<R> M;
  M.mdim = 2;
  int source = gen.next(3);
  if (source == 0) {
    M.left = rb.algebra.mu;
    M.right = rb.algebra.mu;
    M.alphaM = Mat<R>::identity(2);
    M.betaM = Mat<R>::identity(2);
    M.RM = rb.RA;
  } else {
    M.left = gen.tensor(2, 2, 2);
    M.right = gen.tensor(2, 2, 2);
    Mat<R> base = gen.map2();
    M.alphaM = source == 1 ? Mat<R>::identity(2) : base;
    M.betaM = gen.val() * Mat<R>::identity(2) + gen.val() * M.alphaM;
    M.RM = gen.val() * Mat<R>::identity(2) + gen.val() * M.alphaM;
  }
  rb.module = M;

  RotaBaxterData<R> sum = assemble_rb_semidirect(rb);
  bool assembled =
      check_bihom_algebra(sum.algebra).passed() && check_rota_baxter(sum).passed();
  bool pre = check_bimodule(rb_bimodule_part(rb)).passed() &&
             check_rota_baxter(rb).passed();
  tally.record(assembled, pre);
}

// Dendriform direct sum over a fixed valid dendriform algebra.
inline void trial_dendriform_sum(std::uint64_t seed, Tally& tally) {
  Gen gen(seed ^ 0xdedededeULL);
  Record rbrec = catalog_get("rb-id-lm1-kx2");
  const auto& rb = std::get<RotaBaxterData<R>>(rbrec.value);
  auto den = rb_to_dendriform(rb, gen.next(2) == 0 ? DendriformVariant::left
                                                   : DendriformVariant::right);
  DendriformBimodule<R> D = *den.value;
  int source = gen.next(3);
  if (source == 1) {
    Tensor3<R>* slots[4] = {&D.succ_am, &D.prec_am, &D.succ_ma, &D.prec_ma};
    (*slots[gen.next(4)])(gen.next(2), gen.next(2), gen.next(2)) += R(1);
  } else if (source == 2) {
    D.succ_am = gen.tensor(2, 2, 2);
    D.prec_am = gen.tensor(2, 2, 2);
    D.succ_ma = gen.tensor(2, 2, 2);
    D.prec_ma = gen.tensor(2, 2, 2);
    auto [aM, bM] = gen.commuting_pair();
    D.alphaM = aM;
    D.betaM = bM;
  }
  bool assembled = check_dendriform(assemble_dendriform_direct_sum(D)).passed();
  bool pre = check_dendriform_bimodule(D).passed();
  tally.record(assembled, pre);
}

// Pre-Lie direct sum over a fixed valid pre-Lie algebra.
inline void trial_prelie_sum(std::uint64_t seed, Tally& tally) {
  Gen gen(seed ^ 0x9e9e9e9eULL);
  PreLieAlgebra<R> base{2, make_kx(2).mu, Mat<R>::identity(2), Mat<R>::identity(2)};
  PreLieBimodule<R> P;
  P.algebra = base;
  P.mdim = 2;
  int source = gen.next(3);
  if (source == 0) {
    P.circL = base.circ;  // A acting on itself
    P.circR = base.circ;
    P.alphaM = Mat<R>::identity(2);
    P.betaM = Mat<R>::identity(2);
  } else if (source == 1) {
    P.circL = base.circ;
    P.circR = base.circ;
    P.alphaM = Mat<R>::identity(2);
    P.betaM = Mat<R>::identity(2);
    Tensor3<R>* slots[2] = {&P.circL, &P.circR};
    (*slots[gen.next(2)])(gen.next(2), gen.next(2), gen.next(2)) += R(1);
  } else {
    P.circL = gen.tensor(2, 2, 2);
    P.circR = gen.tensor(2, 2, 2);
    auto [aM, bM] = gen.commuting_pair();
    P.alphaM = aM;
    P.betaM = bM;
  }
  bool assembled = check_prelie(assemble_prelie_direct_sum(P)).passed();
  bool pre = check_prelie_bimodule(P).passed();
  tally.record(assembled, pre);
}

/// Runs one harness until `want` accepted trials (or the seed budget runs
/// out) and returns the tally.
template <class Trial>
Tally run_until(Trial&& trial, int want, int budget = 5000) {
  Tally tally;
  for (std::uint64_t seed = 0; int(tally.trials) < want && seed < std::uint64_t(budget);
       ++seed) {
    tally.seed = seed;
    trial(seed, tally);
  }
  return tally;
}

}  // namespace harness
