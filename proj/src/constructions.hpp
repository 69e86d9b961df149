#pragma once

#include <optional>
#include <string>
#include <utility>

#include "checks.hpp"

namespace bihom {

/// Outcome of a construction: verified preconditions, then the built value
/// re-validated by its target checker. `value` is absent when a precondition
/// failed; `ok()` means built and fully valid.
template <class K, class T>
struct BuildResult {
  std::optional<T> value;
  ViolationReport<K> preconditions;
  ViolationReport<K> validation;
  bool ok() const { return value.has_value() && validation.passed(); }
};

namespace detail {

template <class K>
void require_equal_algebra(const BiHomAlgebra<K>& a, const BiHomAlgebra<K>& b,
                           const char* what) {
  bool same = a.dim == b.dim && a.mu == b.mu && a.alpha == b.alpha && a.beta == b.beta &&
              a.unit == b.unit;
  if (!same) throw ShapeError(std::string(what) + ": structures are over different algebras");
}

template <class K>
Tensor3<K> product_from_blocks(int dA, int dM, const Tensor3<K>& muA,
                               const Tensor3<K>* lft, const Tensor3<K>* rgt,
                               const Tensor3<K>* muM) {
  const int d = dA + dM;
  Tensor3<K> t(d, d, d);
  for (int k = 0; k < dA; ++k)
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j) t(k, i, j) = muA(k, i, j);
  if (lft)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dM; ++j) t(dA + k, i, dA + j) = (*lft)(k, i, j);
  if (rgt)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dM; ++i)
        for (int j = 0; j < dA; ++j) t(dA + k, dA + i, j) = (*rgt)(k, i, j);
  if (muM)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dM; ++i)
        for (int j = 0; j < dM; ++j) t(dA + k, dA + i, dA + j) = (*muM)(k, i, j);
  return t;
}

template <class K>
Tensor3<K> coproduct_from_blocks(int dA, int dM, const Tensor3<K>& deA,
                                 const Tensor3<K>* rho, const Tensor3<K>* phi,
                                 const Tensor3<K>* deM) {
  const int d = dA + dM;
  Tensor3<K> t(d, d, d);
  for (int k = 0; k < dA; ++k)
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j) t(k, i, j) = deA(k, i, j);
  if (rho)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dM; ++j) t(dA + k, i, dA + j) = (*rho)(k, i, j);
  if (phi)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dM; ++i)
        for (int j = 0; j < dA; ++j) t(dA + k, dA + i, j) = (*phi)(k, i, j);
  if (deM)
    for (int k = 0; k < dM; ++k)
      for (int i = 0; i < dM; ++i)
        for (int j = 0; j < dM; ++j) t(dA + k, dA + i, dA + j) = (*deM)(k, i, j);
  return t;
}

/// Extracts the (k-block, i-block, j-block) slice of a block tensor and
/// errors if any entry leaks outside the smash-shaped blocks.
template <class K>
Tensor3<K> slice_block(const Tensor3<K>& t, int dA, int kA, int iA, int jA,
                       const char* what) {
  auto lo = [&](int sel) { return sel == 0 ? 0 : dA; };
  auto hi = [&](int sel) { return sel == 0 ? dA : t.dim1(); };
  Tensor3<K> out(hi(kA) - lo(kA), hi(iA) - lo(iA), hi(jA) - lo(jA));
  for (int k = lo(kA); k < hi(kA); ++k)
    for (int i = lo(iA); i < hi(iA); ++i)
      for (int j = lo(jA); j < hi(jA); ++j)
        out(k - lo(kA), i - lo(iA), j - lo(jA)) = t(k, i, j);
  // the complementary output block over the same inputs must vanish
  for (int k = 0; k < t.dim1(); ++k) {
    bool in_k = (k >= lo(kA) && k < hi(kA));
    if (in_k) continue;
    for (int i = lo(iA); i < hi(iA); ++i)
      for (int j = lo(jA); j < hi(jA); ++j)
        if (!(t(k, i, j) == K(0)))
          throw ShapeError(std::string(what) + ": tensor is not of block shape");
  }
  return out;
}

template <class K>
std::pair<Mat<K>, Mat<K>> split_map(const Mat<K>& m, int dA, const char* what) {
  const int d = m.rows();
  Mat<K> a(dA, dA), b(d - dA, d - dA);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      bool ii = i < dA, jj = j < dA;
      if (ii && jj)
        a(i, j) = m(i, j);
      else if (!ii && !jj)
        b(i - dA, j - dA) = m(i, j);
      else if (!(m(i, j) == K(0)))
        throw ShapeError(std::string(what) + ": structure map is not block-diagonal");
    }
  return {a, b};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Yau twists

/// Yau twist: deform an associative algebra by two commuting multiplicative
/// endomorphisms; the product becomes mu(alpha x tensor beta y).
template <class K>
BuildResult<K, BiHomAlgebra<K>> yau_twist_algebra(const BiHomAlgebra<K>& A0,
                                                  const Mat<K>& alpha, const Mat<K>& beta,
                                                  CheckOptions opt = {}) {
  detail::validate_algebra(A0);
  BuildResult<K, BiHomAlgebra<K>> out;
  const int d = A0.dim;
  Mat<K> mu = A0.mu.as_product_map();
  Mat<K> id = Mat<K>::identity(d);
  {
    Checker<K> ck(out.preconditions, opt);
    ck.equal("pre-assoc", mu * kron(id, mu), mu * kron(mu, id), {d, d, d});
    ck.commute("pre-commute-alpha-beta", alpha, beta);
    ck.equal("pre-alpha-mult", alpha * mu, mu * kron(alpha, alpha), {d, d});
    ck.equal("pre-beta-mult", beta * mu, mu * kron(beta, beta), {d, d});
  }
  if (!out.preconditions.passed()) return out;

  BiHomAlgebra<K> tw;
  tw.dim = d;
  tw.mu = Tensor3<K>::from_product_map(mu * kron(alpha, beta), d, d);
  tw.alpha = alpha;
  tw.beta = beta;
  tw.unit = A0.unit;
  out.validation = check_bihom_algebra(tw, opt);
  out.value = std::move(tw);
  return out;
}

/// Yau twist of a Hopf bimodule over an untwisted bialgebra
/// (all structure maps of the input are the identity). The twisted
/// coproduct is (omega tensor psi) after Delta, matching the twisted
/// coactions.
template <class K>
BuildResult<K, HopfBimodule<K>> yau_twist_hopf_bimodule(
    const HopfBimodule<K>& H, const Mat<K>& alA, const Mat<K>& beA, const Mat<K>& psA,
    const Mat<K>& omA, const Mat<K>& aM, const Mat<K>& bM, const Mat<K>& pM,
    const Mat<K>& oM, CheckOptions opt = {}) {
  BuildResult<K, HopfBimodule<K>> out;
  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  Mat<K> idA = Mat<K>::identity(dA), idM = Mat<K>::identity(dM);
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  Mat<K> L = H.left.as_product_map(), R = H.right.as_product_map();
  Mat<K> Rho = H.rho.as_coproduct_map(), Phi = H.phi.as_coproduct_map();
  {
    Checker<K> ck(out.preconditions, opt);
    for (const auto& [nm, m] :
         {std::pair<const char*, const Mat<K>*>{"alpha", &B.alpha},
          {"beta", &B.beta},
          {"psi", &B.psi},
          {"omega", &B.omega}})
      ck.equal(std::string("pre-identity-") + nm, *m, idA, {dA});
    const Mat<K>* As[4] = {&alA, &beA, &psA, &omA};
    const Mat<K>* Ms[4] = {&aM, &bM, &pM, &oM};
    const char* ns[4] = {"alpha", "beta", "psi", "omega"};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        ck.commute(std::string("pre-commute-A-") + ns[i] + "-" + ns[j], *As[i], *As[j]);
        ck.commute(std::string("pre-commute-M-") + ns[i] + "-" + ns[j], *Ms[i], *Ms[j]);
      }
    for (int i = 0; i < 4; ++i) {
      ck.equal(std::string("pre-algmap-") + ns[i], (*As[i]) * mu,
               mu * kron(*As[i], *As[i]), {dA, dA});
      ck.equal(std::string("pre-coalgmap-") + ns[i], kron(*As[i], *As[i]) * de,
               de * (*As[i]), {dA});
      ck.equal(std::string("pre-left-") + ns[i], (*Ms[i]) * L, L * kron(*As[i], *Ms[i]),
               {dA, dM});
      ck.equal(std::string("pre-right-") + ns[i], (*Ms[i]) * R, R * kron(*Ms[i], *As[i]),
               {dM, dA});
      ck.equal(std::string("pre-rho-") + ns[i], Rho * (*Ms[i]),
               kron(*As[i], *Ms[i]) * Rho, {dM});
      ck.equal(std::string("pre-phi-") + ns[i], Phi * (*Ms[i]),
               kron(*Ms[i], *As[i]) * Phi, {dM});
    }
    out.preconditions.merge(check_hopf_bimodule(H, opt));
  }
  if (!out.preconditions.passed()) return out;

  HopfBimodule<K> tw;
  tw.bialgebra.dim = dA;
  tw.bialgebra.lambda = B.lambda;
  tw.bialgebra.mu = Tensor3<K>::from_product_map(mu * kron(alA, beA), dA, dA);
  tw.bialgebra.delta = Tensor3<K>::from_coproduct_map(kron(omA, psA) * de, dA, dA);
  tw.bialgebra.alpha = alA;
  tw.bialgebra.beta = beA;
  tw.bialgebra.psi = psA;
  tw.bialgebra.omega = omA;
  tw.bialgebra.unit = B.unit;
  tw.bialgebra.counit = B.counit;
  tw.mdim = dM;
  tw.left = Tensor3<K>::from_product_map(L * kron(alA, bM), dA, dM);
  tw.right = Tensor3<K>::from_product_map(R * kron(aM, beA), dM, dA);
  tw.rho = Tensor3<K>::from_coproduct_map(kron(omA, pM) * Rho, dA, dM);
  tw.phi = Tensor3<K>::from_coproduct_map(kron(oM, psA) * Phi, dM, dA);
  tw.alphaM = aM;
  tw.betaM = bM;
  tw.psiM = pM;
  tw.omegaM = oM;
  out.validation = check_inf_bialgebra(tw.bialgebra, opt);
  out.validation.merge(check_hopf_bimodule(tw, opt));
  out.value = std::move(tw);
  return out;
}

// ---------------------------------------------------------------------------
// infBH-product / coproduct / biproduct

/// Raw smash-product assembly on A + M; no checks.
template <class K>
BiHomAlgebra<K> assemble_product(const BimoduleData<K>& M) {
  if (!M.left || !M.right || !M.muM)
    throw ShapeError("infbh-product: left, right and muM are all required");
  BiHomAlgebra<K> sum;
  sum.dim = M.algebra.dim + M.mdim;
  sum.mu = detail::product_from_blocks(M.algebra.dim, M.mdim, M.algebra.mu, &*M.left,
                                       &*M.right, &*M.muM);
  sum.alpha = direct_sum(M.algebra.alpha, M.alphaM);
  sum.beta = direct_sum(M.algebra.beta, M.betaM);
  return sum;
}

/// The smash product is BiHom-associative iff A is a BiHom-associative
/// algebra and M is a bimodule algebra over it.
template <class K>
BuildResult<K, BiHomAlgebra<K>> infbh_product(const BimoduleData<K>& M,
                                              CheckOptions opt = {}) {
  BuildResult<K, BiHomAlgebra<K>> out;
  out.preconditions = check_bihom_algebra(M.algebra, opt);
  out.preconditions.merge(check_bimodule(M, opt));
  if (!out.preconditions.passed()) return out;
  BiHomAlgebra<K> sum = assemble_product(M);
  out.validation = check_bihom_algebra(sum, opt);
  out.value = std::move(sum);
  return out;
}

/// Converse direction: recover the bimodule-algebra bundle from a
/// block-shaped product algebra on A + M.
template <class K>
BimoduleData<K> split_product(const BiHomAlgebra<K>& sum, int dA) {
  if (dA <= 0 || dA >= sum.dim) throw ShapeError("split_product: bad block size");
  const int dM = sum.dim - dA;
  auto [alA, aM] = detail::split_map(sum.alpha, dA, "split_product");
  auto [beA, bM] = detail::split_map(sum.beta, dA, "split_product");
  BimoduleData<K> M;
  M.algebra.dim = dA;
  M.algebra.mu = detail::slice_block(sum.mu, dA, 0, 0, 0, "split_product");
  M.algebra.alpha = alA;
  M.algebra.beta = beA;
  M.mdim = dM;
  M.left = detail::slice_block(sum.mu, dA, 1, 0, 1, "split_product");
  M.right = detail::slice_block(sum.mu, dA, 1, 1, 0, "split_product");
  M.muM = detail::slice_block(sum.mu, dA, 1, 1, 1, "split_product");
  M.alphaM = aM;
  M.betaM = bM;
  return M;
}

template <class K>
BiHomCoalgebra<K> assemble_coproduct(const BicomoduleData<K>& M) {
  if (!M.rho || !M.phi || !M.deltaM)
    throw ShapeError("infbh-coproduct: rho, phi and deltaM are all required");
  BiHomCoalgebra<K> sum;
  sum.dim = M.coalgebra.dim + M.mdim;
  sum.delta = detail::coproduct_from_blocks(M.coalgebra.dim, M.mdim, M.coalgebra.delta,
                                            &*M.rho, &*M.phi, &*M.deltaM);
  sum.psi = direct_sum(M.coalgebra.psi, M.psiM);
  sum.omega = direct_sum(M.coalgebra.omega, M.omegaM);
  return sum;
}

/// Dual of infbh_product: the smash coproduct on C + M.
template <class K>
BuildResult<K, BiHomCoalgebra<K>> infbh_coproduct(const BicomoduleData<K>& M,
                                                  CheckOptions opt = {}) {
  BuildResult<K, BiHomCoalgebra<K>> out;
  out.preconditions = check_bihom_coalgebra(M.coalgebra, opt);
  out.preconditions.merge(check_bicomodule(M, opt));
  if (!out.preconditions.passed()) return out;
  BiHomCoalgebra<K> sum = assemble_coproduct(M);
  out.validation = check_bihom_coalgebra(sum, opt);
  out.value = std::move(sum);
  return out;
}

template <class K>
BicomoduleData<K> split_coproduct(const BiHomCoalgebra<K>& sum, int dA) {
  if (dA <= 0 || dA >= sum.dim) throw ShapeError("split_coproduct: bad block size");
  const int dM = sum.dim - dA;
  auto [psA, pM] = detail::split_map(sum.psi, dA, "split_coproduct");
  auto [omA, oM] = detail::split_map(sum.omega, dA, "split_coproduct");
  BicomoduleData<K> M;
  M.coalgebra.dim = dA;
  M.coalgebra.delta = detail::slice_block(sum.delta, dA, 0, 0, 0, "split_coproduct");
  M.coalgebra.psi = psA;
  M.coalgebra.omega = omA;
  M.mdim = dM;
  M.rho = detail::slice_block(sum.delta, dA, 1, 0, 1, "split_coproduct");
  M.phi = detail::slice_block(sum.delta, dA, 1, 1, 0, "split_coproduct");
  M.deltaM = detail::slice_block(sum.delta, dA, 1, 1, 1, "split_coproduct");
  M.psiM = pM;
  M.omegaM = oM;
  return M;
}

template <class K>
BimoduleData<K> bimodule_part(const HopfBimodule<K>& H) {
  BimoduleData<K> M;
  M.algebra = H.bialgebra.algebra();
  M.mdim = H.mdim;
  M.left = H.left;
  M.right = H.right;
  M.muM = H.muM;
  M.alphaM = H.alphaM;
  M.betaM = H.betaM;
  M.psiM = H.psiM;
  M.omegaM = H.omegaM;
  return M;
}

template <class K>
BicomoduleData<K> bicomodule_part(const HopfBimodule<K>& H) {
  BicomoduleData<K> M;
  M.coalgebra = H.bialgebra.coalgebra();
  M.mdim = H.mdim;
  M.rho = H.rho;
  M.phi = H.phi;
  M.deltaM = H.deltaM;
  M.psiM = H.psiM;
  M.omegaM = H.omegaM;
  M.alphaM = H.alphaM;
  M.betaM = H.betaM;
  return M;
}

template <class K>
InfBialgebra<K> assemble_biproduct(const HopfBimodule<K>& H) {
  if (!H.muM || !H.deltaM) throw ShapeError("biproduct: muM and deltaM are required");
  InfBialgebra<K> sum;
  sum.dim = H.bialgebra.dim + H.mdim;
  sum.lambda = H.bialgebra.lambda;
  sum.mu = detail::product_from_blocks(H.bialgebra.dim, H.mdim, H.bialgebra.mu, &H.left,
                                       &H.right, &*H.muM);
  sum.delta = detail::coproduct_from_blocks(H.bialgebra.dim, H.mdim, H.bialgebra.delta,
                                            &H.rho, &H.phi, &*H.deltaM);
  sum.alpha = direct_sum(H.bialgebra.alpha, H.alphaM);
  sum.beta = direct_sum(H.bialgebra.beta, H.betaM);
  sum.psi = direct_sum(H.bialgebra.psi, H.psiM);
  sum.omega = direct_sum(H.bialgebra.omega, H.omegaM);
  return sum;
}

/// Biproduct: preconditions (a) Hopf bimodule, (b) module coalgebra,
/// (c) comodule algebra, (d) Eq yd, on top of the ambient hypotheses (valid
/// bialgebra, bimodule algebra, bicomodule coalgebra). Output keeps lambda.
template <class K>
BuildResult<K, InfBialgebra<K>> biproduct(const HopfBimodule<K>& H, CheckOptions opt = {}) {
  if (!H.muM || !H.deltaM) throw ShapeError("biproduct: muM and deltaM are required");
  BuildResult<K, InfBialgebra<K>> out;
  out.preconditions = check_inf_bialgebra(H.bialgebra, opt);
  out.preconditions.merge(check_bimodule(bimodule_part(H), opt));
  out.preconditions.merge(check_bicomodule(bicomodule_part(H), opt));
  out.preconditions.merge(check_hopf_bimodule(H, opt));  // (a)
  out.preconditions.merge(check_module_coalgebra(H.bialgebra, H.left, H.right, H.alphaM,
                                                 H.betaM, *H.deltaM, H.psiM, H.omegaM,
                                                 opt));  // (b)
  out.preconditions.merge(check_comodule_algebra(H.bialgebra, H.rho, H.phi, H.psiM,
                                                 H.omegaM, *H.muM, H.alphaM, H.betaM,
                                                 opt));  // (c)
  out.preconditions.merge(check_yd(H, opt));             // (d)
  if (!out.preconditions.passed()) return out;
  InfBialgebra<K> sum = assemble_biproduct(H);
  out.validation = check_inf_bialgebra(sum, opt);
  out.value = std::move(sum);
  return out;
}

// ---------------------------------------------------------------------------
// Rota-Baxter: semidirect product and the dendriform / pre-Lie chain

template <class K>
RotaBaxterData<K> assemble_rb_semidirect(const RotaBaxterData<K>& Rb) {
  if (!Rb.module) throw ShapeError("rb-semidirect: module is required");
  const auto& M = *Rb.module;
  RotaBaxterData<K> sum;
  sum.algebra.dim = Rb.algebra.dim + M.mdim;
  sum.algebra.mu = detail::product_from_blocks<K>(Rb.algebra.dim, M.mdim, Rb.algebra.mu,
                                                  &M.left, &M.right, nullptr);
  sum.algebra.alpha = direct_sum(Rb.algebra.alpha, M.alphaM);
  sum.algebra.beta = direct_sum(Rb.algebra.beta, M.betaM);
  sum.lambda = Rb.lambda;
  sum.RA = direct_sum(Rb.RA, M.RM);
  return sum;
}

template <class K>
BimoduleData<K> rb_bimodule_part(const RotaBaxterData<K>& Rb) {
  if (!Rb.module) throw ShapeError("rota-baxter: module is required");
  BimoduleData<K> M;
  M.algebra = Rb.algebra;
  M.mdim = Rb.module->mdim;
  M.left = Rb.module->left;
  M.right = Rb.module->right;
  M.alphaM = Rb.module->alphaM;
  M.betaM = Rb.module->betaM;
  return M;
}

/// Semidirect product: A + M with zero product on M tensor M and the
/// operator R_A + R_M.
template <class K>
BuildResult<K, RotaBaxterData<K>> rb_semidirect(const RotaBaxterData<K>& Rb,
                                                CheckOptions opt = {}) {
  if (!Rb.module) throw ShapeError("rb-semidirect: module is required");
  BuildResult<K, RotaBaxterData<K>> out;
  out.preconditions = check_bihom_algebra(Rb.algebra, opt);
  out.preconditions.merge(check_bimodule(rb_bimodule_part(Rb), opt));
  out.preconditions.merge(check_rota_baxter(Rb, opt));
  if (!out.preconditions.passed()) return out;
  RotaBaxterData<K> sum = assemble_rb_semidirect(Rb);
  out.validation = check_bihom_algebra(sum.algebra, opt);
  out.validation.merge(check_rota_baxter(sum, opt));
  out.value = std::move(sum);
  return out;
}

/// Rota-Baxter data induce dendriform structures. Both variants share the
/// plumbing; the flag selects where the weight term lands.
template <class K>
BuildResult<K, DendriformBimodule<K>> rb_to_dendriform(const RotaBaxterData<K>& Rb,
                                                       DendriformVariant variant,
                                                       CheckOptions opt = {}) {
  if (!Rb.module) throw ShapeError("rb-to-dendriform: module is required");
  BuildResult<K, DendriformBimodule<K>> out;
  out.preconditions = check_bihom_algebra(Rb.algebra, opt);
  out.preconditions.merge(check_bimodule(rb_bimodule_part(Rb), opt));
  out.preconditions.merge(check_rota_baxter(Rb, opt));
  if (!out.preconditions.passed()) return out;

  const auto& M = *Rb.module;
  const int dA = Rb.algebra.dim, dM = M.mdim;
  const K& lm = Rb.lambda;
  Mat<K> mu = Rb.algebra.mu.as_product_map();
  Mat<K> L = M.left.as_product_map(), R = M.right.as_product_map();
  Mat<K> idA = Mat<K>::identity(dA), idM = Mat<K>::identity(dM);

  DendriformBimodule<K> den;
  den.algebra.dim = dA;
  den.algebra.alpha = Rb.algebra.alpha;
  den.algebra.beta = Rb.algebra.beta;
  den.mdim = dM;
  den.alphaM = M.alphaM;
  den.betaM = M.betaM;
  Mat<K> prec, succ, pam, sam, pma, sma;
  if (variant == DendriformVariant::left) {
    prec = mu * kron(idA, Rb.RA) + lm * mu;
    succ = mu * kron(Rb.RA, idA);
    sam = L * kron(Rb.RA, idM);
    pam = L * kron(idA, M.RM) + lm * L;
    sma = R * kron(M.RM, idA);
    pma = R * kron(idM, Rb.RA) + lm * R;
  } else {
    prec = mu * kron(idA, Rb.RA);
    succ = mu * kron(Rb.RA, idA) + lm * mu;
    sam = L * kron(Rb.RA, idM) + lm * L;
    pam = L * kron(idA, M.RM);
    sma = R * kron(M.RM, idA) + lm * R;
    pma = R * kron(idM, Rb.RA);
  }
  den.algebra.prec = Tensor3<K>::from_product_map(prec, dA, dA);
  den.algebra.succ = Tensor3<K>::from_product_map(succ, dA, dA);
  den.succ_am = Tensor3<K>::from_product_map(sam, dA, dM);
  den.prec_am = Tensor3<K>::from_product_map(pam, dA, dM);
  den.succ_ma = Tensor3<K>::from_product_map(sma, dM, dA);
  den.prec_ma = Tensor3<K>::from_product_map(pma, dM, dA);
  out.validation = check_dendriform(den.algebra, opt);
  out.validation.merge(check_dendriform_bimodule(den, opt));
  out.value = std::move(den);
  return out;
}

/// Pre-Lie structures out of a dendriform bimodule with invertible
/// structure maps: a o b = a > b - (alpha^-1 beta b) < (alpha beta^-1 a).
template <class K>
BuildResult<K, PreLieBimodule<K>> dendriform_to_prelie(const DendriformBimodule<K>& D,
                                                       CheckOptions opt = {}) {
  BuildResult<K, PreLieBimodule<K>> out;
  out.preconditions = check_dendriform(D.algebra, opt);
  out.preconditions.merge(check_dendriform_bimodule(D, opt));
  if (!out.preconditions.passed()) return out;

  const int dA = D.algebra.dim, dM = D.mdim;
  Mat<K> alAi = invert(D.algebra.alpha), beAi = invert(D.algebra.beta);
  Mat<K> aMi = invert(D.alphaM), bMi = invert(D.betaM);
  Mat<K> P = D.algebra.prec.as_product_map(), S = D.algebra.succ.as_product_map();
  Mat<K> Pam = D.prec_am.as_product_map(), Sam = D.succ_am.as_product_map();
  Mat<K> Pma = D.prec_ma.as_product_map(), Sma = D.succ_ma.as_product_map();

  PreLieBimodule<K> pl;
  pl.algebra.dim = dA;
  pl.algebra.alpha = D.algebra.alpha;
  pl.algebra.beta = D.algebra.beta;
  pl.mdim = dM;
  pl.alphaM = D.alphaM;
  pl.betaM = D.betaM;
  // a o b = a > b - (alpha^-1 beta b) < (alpha beta^-1 a)
  Mat<K> circ = S - P * kron(alAi * D.algebra.beta, D.algebra.alpha * beAi) * flip<K>(dA);
  // a o_l m = a > m - (alphaM^-1 betaM m) < (alphaA betaA^-1 a)
  Mat<K> circL = Sam - Pma * kron(aMi * D.betaM, D.algebra.alpha * beAi) * flip<K>(dA, dM);
  // m o_r a = m > a - (alphaA^-1 betaA a) < (alphaM betaM^-1 m)
  Mat<K> circR = Sma - Pam * kron(alAi * D.algebra.beta, D.alphaM * bMi) * flip<K>(dM, dA);
  pl.algebra.circ = Tensor3<K>::from_product_map(circ, dA, dA);
  pl.circL = Tensor3<K>::from_product_map(circL, dA, dM);
  pl.circR = Tensor3<K>::from_product_map(circR, dM, dA);
  out.validation = check_prelie(pl.algebra, opt);
  out.validation.merge(check_prelie_bimodule(pl, opt));
  out.value = std::move(pl);
  return out;
}

/// Dendriform structure on A + M (zero products on M tensor M).
template <class K>
DendriformAlgebra<K> assemble_dendriform_direct_sum(const DendriformBimodule<K>& D) {
  const int dA = D.algebra.dim, dM = D.mdim;
  DendriformAlgebra<K> sum;
  sum.dim = dA + dM;
  sum.prec = detail::product_from_blocks<K>(dA, dM, D.algebra.prec, &D.prec_am, &D.prec_ma,
                                            nullptr);
  sum.succ = detail::product_from_blocks<K>(dA, dM, D.algebra.succ, &D.succ_am, &D.succ_ma,
                                            nullptr);
  sum.alpha = direct_sum(D.algebra.alpha, D.alphaM);
  sum.beta = direct_sum(D.algebra.beta, D.betaM);
  return sum;
}

template <class K>
BuildResult<K, DendriformAlgebra<K>> dendriform_direct_sum(const DendriformBimodule<K>& D,
                                                           CheckOptions opt = {}) {
  BuildResult<K, DendriformAlgebra<K>> out;
  out.preconditions = check_dendriform(D.algebra, opt);
  out.preconditions.merge(check_dendriform_bimodule(D, opt));
  if (!out.preconditions.passed()) return out;
  DendriformAlgebra<K> sum = assemble_dendriform_direct_sum(D);
  out.validation = check_dendriform(sum, opt);
  out.value = std::move(sum);
  return out;
}

/// Pre-Lie structure on A + M.
template <class K>
PreLieAlgebra<K> assemble_prelie_direct_sum(const PreLieBimodule<K>& P) {
  const int dA = P.algebra.dim, dM = P.mdim;
  PreLieAlgebra<K> sum;
  sum.dim = dA + dM;
  sum.circ =
      detail::product_from_blocks<K>(dA, dM, P.algebra.circ, &P.circL, &P.circR, nullptr);
  sum.alpha = direct_sum(P.algebra.alpha, P.alphaM);
  sum.beta = direct_sum(P.algebra.beta, P.betaM);
  return sum;
}

template <class K>
BuildResult<K, PreLieAlgebra<K>> prelie_direct_sum(const PreLieBimodule<K>& P,
                                                   CheckOptions opt = {}) {
  BuildResult<K, PreLieAlgebra<K>> out;
  out.preconditions = check_prelie(P.algebra, opt);
  out.preconditions.merge(check_prelie_bimodule(P, opt));
  if (!out.preconditions.passed()) return out;
  PreLieAlgebra<K> sum = assemble_prelie_direct_sum(P);
  out.validation = check_prelie(sum, opt);
  out.value = std::move(sum);
  return out;
}

// ---------------------------------------------------------------------------
// Hopf bimodule -> pre-Lie bimodule, via map powers or map inverses

/// Pre-Lie bimodule over (A, star, alpha^2 beta, alpha^2 beta^2 psi omega)
/// built from map powers of a Hopf bimodule.
template <class K>
BuildResult<K, PreLieBimodule<K>> hopf_to_prelie_powers(const HopfBimodule<K>& H,
                                                        CheckOptions opt = {}) {
  BuildResult<K, PreLieBimodule<K>> out;
  out.preconditions = check_inf_bialgebra(H.bialgebra, opt);
  out.preconditions.merge(check_hopf_bimodule(H, opt));
  if (!out.preconditions.passed()) return out;

  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  Mat<K> L = H.left.as_product_map(), R = H.right.as_product_map();
  Mat<K> Rho = H.rho.as_coproduct_map(), Phi = H.phi.as_coproduct_map();
  const Mat<K>&al = B.alpha, &be = B.beta, &ps = B.psi, &om = B.omega;
  const Mat<K>&aM = H.alphaM, &bM = H.betaM, &pM = H.psiM, &oM = H.omegaM;
  Mat<K> idA = Mat<K>::identity(dA), idM = Mat<K>::identity(dM);

  Mat<K> be2ps = be * be * ps;           // beta^2 psi on A
  Mat<K> al2beom = al * al * be * om;    // alpha^2 beta omega on A
  // a star b = (beta^2 psi(b1) alpha(a)) alpha^2 beta omega(b2); the flip
  // moves b1 in front of a before the inner product.
  Mat<K> star = mu * kron(mu * kron(be2ps, al), al2beom) * kron(flip<K>(dA, dA), idA) *
                kron(idA, de);
  // a star m, first summand via rho, second via phi
  Mat<K> t1 = L * kron(mu * kron(be2ps, al), aM * aM * bM * oM) *
              kron(flip<K>(dA, dA), idM) * kron(idA, Rho);
  Mat<K> t2 = R * kron(R * kron(bM * bM * pM, al), al2beom) * kron(flip<K>(dA, dM), idA) *
              kron(idA, Phi);
  Mat<K> starL = t1 + t2;
  // m star a = (beta^2 psi(a1) |> alphaM(m)) <| alpha^2 beta omega(a2)
  Mat<K> starR = R * kron(L * kron(be2ps, aM), al2beom) * kron(flip<K>(dM, dA), idA) *
                 kron(idM, de);

  PreLieBimodule<K> pl;
  pl.algebra.dim = dA;
  pl.algebra.circ = Tensor3<K>::from_product_map(star, dA, dA);
  pl.algebra.alpha = al * al * be;
  pl.algebra.beta = al * al * be * be * ps * om;
  pl.mdim = dM;
  pl.circL = Tensor3<K>::from_product_map(starL, dA, dM);
  pl.circR = Tensor3<K>::from_product_map(starR, dM, dA);
  pl.alphaM = aM * aM * bM;
  pl.betaM = aM * aM * bM * bM * pM * oM;
  out.validation = check_prelie(pl.algebra, opt);
  out.validation.merge(check_prelie_bimodule(pl, opt));
  out.value = std::move(pl);
  return out;
}

/// Pre-Lie bimodule over (A, star, alpha, beta) built from map inverses;
/// all eight structure maps must be invertible.
template <class K>
BuildResult<K, PreLieBimodule<K>> hopf_to_prelie_inverses(const HopfBimodule<K>& H,
                                                          CheckOptions opt = {}) {
  BuildResult<K, PreLieBimodule<K>> out;
  out.preconditions = check_inf_bialgebra(H.bialgebra, opt);
  out.preconditions.merge(check_hopf_bimodule(H, opt));
  if (!out.preconditions.passed()) return out;

  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  Mat<K> L = H.left.as_product_map(), R = H.right.as_product_map();
  Mat<K> Rho = H.rho.as_coproduct_map(), Phi = H.phi.as_coproduct_map();
  Mat<K> ali = invert(B.alpha), bei = invert(B.beta), psi_i = invert(B.psi),
         omi = invert(B.omega);
  Mat<K> aMi = invert(H.alphaM), bMi = invert(H.betaM), pMi = invert(H.psiM),
         oMi = invert(H.omegaM);
  Mat<K> idA = Mat<K>::identity(dA), idM = Mat<K>::identity(dM);

  Mat<K> pre = ali * ali * B.beta * omi;   // alpha^-2 beta omega^-1 on A
  Mat<K> preM = aMi * aMi * H.betaM * oMi; // alpha_M^-2 beta_M omega_M^-1
  // a star b = (alpha^-2 beta omega^-1(b1) beta^-1(a)) psi^-1(b2)
  Mat<K> star = mu * kron(mu * kron(pre, bei), psi_i) * kron(flip<K>(dA, dA), idA) *
                kron(idA, de);
  Mat<K> t1 = L * kron(mu * kron(pre, bei), pMi) * kron(flip<K>(dA, dA), idM) *
              kron(idA, Rho);
  Mat<K> t2 = R * kron(R * kron(preM, bei), psi_i) * kron(flip<K>(dA, dM), idA) *
              kron(idA, Phi);
  Mat<K> starL = t1 + t2;
  Mat<K> starR = R * kron(L * kron(pre, bMi), psi_i) * kron(flip<K>(dM, dA), idA) *
                 kron(idM, de);

  PreLieBimodule<K> pl;
  pl.algebra.dim = dA;
  pl.algebra.circ = Tensor3<K>::from_product_map(star, dA, dA);
  pl.algebra.alpha = B.alpha;
  pl.algebra.beta = B.beta;
  pl.mdim = dM;
  pl.circL = Tensor3<K>::from_product_map(starL, dA, dM);
  pl.circR = Tensor3<K>::from_product_map(starR, dM, dA);
  pl.alphaM = H.alphaM;
  pl.betaM = H.betaM;
  out.validation = check_prelie(pl.algebra, opt);
  out.validation.merge(check_prelie_bimodule(pl, opt));
  out.value = std::move(pl);
  return out;
}

}  // namespace bihom
