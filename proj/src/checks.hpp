#pragma once

#include <string>

#include "report.hpp"
#include "structures.hpp"

namespace bihom {

// Exhaustive exact verification of the axiom systems. Every axiom is stated
// as an equality of linear maps on tensor powers of the basis; a checker
// evaluates both sides on all basis tuples (columns of the composed
// matrices), which by multilinearity proves the identity on the whole space.
//
// Checkers are pure; reports list axioms in a fixed evaluation order.

namespace detail {

template <class K>
void require(bool cond, const std::string& what) {
  if (!cond) throw ShapeError(what);
}

template <class K>
void validate_algebra(const BiHomAlgebra<K>& A) {
  require<K>(A.dim >= 0, "algebra: dim must be nonnegative");
  require<K>(A.mu.dim1() == A.dim && A.mu.dim2() == A.dim && A.mu.dim3() == A.dim,
             "algebra: mu shape mismatch");
  require<K>(A.alpha.rows() == A.dim && A.alpha.cols() == A.dim, "algebra: alpha shape");
  require<K>(A.beta.rows() == A.dim && A.beta.cols() == A.dim, "algebra: beta shape");
  if (A.unit) require<K>(int(A.unit->size()) == A.dim, "algebra: unit shape");
}

template <class K>
void validate_coalgebra(const BiHomCoalgebra<K>& C) {
  require<K>(C.dim >= 0, "coalgebra: dim must be nonnegative");
  require<K>(C.delta.dim1() == C.dim && C.delta.dim2() == C.dim && C.delta.dim3() == C.dim,
             "coalgebra: delta shape mismatch");
  require<K>(C.psi.rows() == C.dim && C.psi.cols() == C.dim, "coalgebra: psi shape");
  require<K>(C.omega.rows() == C.dim && C.omega.cols() == C.dim, "coalgebra: omega shape");
  if (C.counit) require<K>(int(C.counit->size()) == C.dim, "coalgebra: counit shape");
}

template <class K>
Mat<K> covector_row(const Vec<K>& eps) {
  Mat<K> e(1, int(eps.size()));
  for (size_t i = 0; i < eps.size(); ++i) e(0, int(i)) = eps[i];
  return e;
}

template <class K>
Mat<K> vector_col(const Vec<K>& v) {
  Mat<K> m(int(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(int(i), 0) = v[i];
  return m;
}

template <class K>
void algebra_axioms(Checker<K>& ck, const BiHomAlgebra<K>& A) {
  const int d = A.dim;
  Mat<K> mu = A.mu.as_product_map();
  const Mat<K>&al = A.alpha, &be = A.beta;
  Mat<K> id = Mat<K>::identity(d);
  ck.commute("eq-commute-alpha-beta", al, be);
  ck.equal("eq-1.2-alpha", al * mu, mu * kron(al, al), {d, d});
  ck.equal("eq-1.2-beta", be * mu, mu * kron(be, be), {d, d});
  ck.equal("eq-1.3", mu * kron(al, mu), mu * kron(mu, be), {d, d, d});
  if (A.unit) {
    ck.equal_vec("eq-1.5-alpha-unit", al.apply(*A.unit), *A.unit);
    ck.equal_vec("eq-1.5-beta-unit", be.apply(*A.unit), *A.unit);
    Mat<K> u = vector_col(*A.unit);
    ck.equal("eq-1.5-right", mu * kron(id, u), al, {d});
    ck.equal("eq-1.5-left", mu * kron(u, id), be, {d});
  }
}

template <class K>
void coalgebra_axioms(Checker<K>& ck, const BiHomCoalgebra<K>& C) {
  const int d = C.dim;
  Mat<K> de = C.delta.as_coproduct_map();
  const Mat<K>&ps = C.psi, &om = C.omega;
  Mat<K> id = Mat<K>::identity(d);
  ck.commute("eq-commute-psi-omega", ps, om);
  ck.equal("eq-1.7-psi", kron(ps, ps) * de, de * ps, {d});
  ck.equal("eq-1.7-omega", kron(om, om) * de, de * om, {d});
  ck.equal("eq-1.9", kron(de, ps) * de, kron(om, de) * de, {d});
  if (C.counit) {
    Mat<K> e = covector_row(*C.counit);
    ck.equal("eq-1.11-psi", e * ps, e, {d});
    ck.equal("eq-1.11-omega", e * om, e, {d});
    ck.equal("eq-1.11-right", kron(id, e) * de, om, {d});
    ck.equal("eq-1.11-left", kron(e, id) * de, ps, {d});
  }
}

template <class K>
void left_module_axioms(Checker<K>& ck, const BiHomAlgebra<K>& A,
                        const Tensor3<K>& lft, const Mat<K>& aM, const Mat<K>& bM) {
  const int dA = A.dim, dM = lft.dim1();
  Mat<K> L = lft.as_product_map();
  Mat<K> mu = A.mu.as_product_map();
  ck.equal("eq-1.13-alpha", aM * L, L * kron(A.alpha, aM), {dA, dM});
  ck.equal("eq-1.13-beta", bM * L, L * kron(A.beta, bM), {dA, dM});
  ck.equal("eq-1.15", L * kron(A.alpha, L), L * kron(mu, bM), {dA, dA, dM});
}

template <class K>
void right_module_axioms(Checker<K>& ck, const BiHomAlgebra<K>& A,
                         const Tensor3<K>& rgt, const Mat<K>& aM, const Mat<K>& bM) {
  const int dA = A.dim, dM = rgt.dim1();
  Mat<K> R = rgt.as_product_map();
  Mat<K> mu = A.mu.as_product_map();
  ck.equal("eq-1.13r-alpha", aM * R, R * kron(aM, A.alpha), {dM, dA});
  ck.equal("eq-1.13r-beta", bM * R, R * kron(bM, A.beta), {dM, dA});
  ck.equal("eq-1.15r", R * kron(aM, mu), R * kron(R, A.beta), {dM, dA, dA});
}

template <class K>
void left_comodule_axioms(Checker<K>& ck, const BiHomCoalgebra<K>& C,
                          const Tensor3<K>& rho, const Mat<K>& pM, const Mat<K>& oM) {
  const int dM = rho.dim1();
  Mat<K> Rho = rho.as_coproduct_map();
  Mat<K> de = C.delta.as_coproduct_map();
  ck.equal("eq-01.22a-psi", kron(C.psi, pM) * Rho, Rho * pM, {dM});
  ck.equal("eq-01.22a-omega", kron(C.omega, oM) * Rho, Rho * oM, {dM});
  ck.equal("eq-01.24", kron(C.omega, Rho) * Rho, kron(de, pM) * Rho, {dM});
}

template <class K>
void right_comodule_axioms(Checker<K>& ck, const BiHomCoalgebra<K>& C,
                           const Tensor3<K>& phi, const Mat<K>& pM, const Mat<K>& oM) {
  const int dM = phi.dim1();
  Mat<K> Phi = phi.as_coproduct_map();
  Mat<K> de = C.delta.as_coproduct_map();
  ck.equal("eq-01.22ar-psi", kron(pM, C.psi) * Phi, Phi * pM, {dM});
  ck.equal("eq-01.22ar-omega", kron(oM, C.omega) * Phi, Phi * oM, {dM});
  ck.equal("eq-01.24r", kron(oM, de) * Phi, kron(Phi, C.psi) * Phi, {dM});
}

template <class K>
void commute_four(Checker<K>& ck, const char* n1, const Mat<K>& m1, const char* n2,
                  const Mat<K>& m2, const char* n3, const Mat<K>& m3, const char* n4,
                  const Mat<K>& m4) {
  const Mat<K>* ms[4] = {&m1, &m2, &m3, &m4};
  const char* ns[4] = {n1, n2, n3, n4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      ck.commute(std::string("eq-commute-") + ns[i] + "-" + ns[j], *ms[i], *ms[j]);
}

}  // namespace detail

template <class K>
ViolationReport<K> check_bihom_algebra(const BiHomAlgebra<K>& A, CheckOptions opt = {}) {
  detail::validate_algebra(A);
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  detail::algebra_axioms(ck, A);
  return rep;
}

template <class K>
ViolationReport<K> check_bihom_coalgebra(const BiHomCoalgebra<K>& C, CheckOptions opt = {}) {
  detail::validate_coalgebra(C);
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  detail::coalgebra_axioms(ck, C);
  return rep;
}

/// Eq 13.3 only; pair with check_bihom_algebra for full BiHom-commutativity.
template <class K>
ViolationReport<K> check_commutative(const BiHomAlgebra<K>& A, CheckOptions opt = {}) {
  detail::validate_algebra(A);
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = A.dim;
  Mat<K> mu = A.mu.as_product_map();
  Mat<K> lhs = mu * kron(A.beta, A.alpha);
  ck.equal("eq-13.3", lhs, lhs * flip<K>(d), {d, d});
  return rep;
}

/// Module-side axioms only; the embedded algebra has its own checker.
template <class K>
ViolationReport<K> check_bimodule(const BimoduleData<K>& D, CheckOptions opt = {}) {
  detail::validate_algebra(D.algebra);
  if (!D.left || !D.right) throw ShapeError("bimodule: both actions are required");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dA = D.algebra.dim, dM = D.mdim;
  ck.commute("eq-commute-alphaM-betaM", D.alphaM, D.betaM);
  detail::left_module_axioms(ck, D.algebra, *D.left, D.alphaM, D.betaM);
  detail::right_module_axioms(ck, D.algebra, *D.right, D.alphaM, D.betaM);
  Mat<K> L = D.left->as_product_map(), R = D.right->as_product_map();
  ck.equal("eq-1.16", L * kron(D.algebra.alpha, R), R * kron(L, D.algebra.beta),
           {dA, dM, dA});
  if (D.muM) {
    Mat<K> mM = D.muM->as_product_map();
    const Mat<K>&aM = D.alphaM, &bM = D.betaM;
    ck.equal("eq-M-1.2-alpha", aM * mM, mM * kron(aM, aM), {dM, dM});
    ck.equal("eq-M-1.2-beta", bM * mM, mM * kron(bM, bM), {dM, dM});
    ck.equal("eq-M-1.3", mM * kron(aM, mM), mM * kron(mM, bM), {dM, dM, dM});
    ck.equal("eq-bimoda1", L * kron(D.algebra.alpha, mM), mM * kron(L, bM), {dA, dM, dM});
    ck.equal("eq-bimoda2", mM * kron(aM, R), R * kron(mM, D.algebra.beta), {dM, dM, dA});
    ck.equal("eq-bimoda3", mM * kron(aM, L), mM * kron(R, bM), {dM, dA, dM});
  }
  return rep;
}

template <class K>
ViolationReport<K> check_left_module(const BimoduleData<K>& D, CheckOptions opt = {}) {
  detail::validate_algebra(D.algebra);
  if (!D.left) throw ShapeError("left module: action missing");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  ck.commute("eq-commute-alphaM-betaM", D.alphaM, D.betaM);
  detail::left_module_axioms(ck, D.algebra, *D.left, D.alphaM, D.betaM);
  return rep;
}

template <class K>
ViolationReport<K> check_right_module(const BimoduleData<K>& D, CheckOptions opt = {}) {
  detail::validate_algebra(D.algebra);
  if (!D.right) throw ShapeError("right module: action missing");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  ck.commute("eq-commute-alphaM-betaM", D.alphaM, D.betaM);
  detail::right_module_axioms(ck, D.algebra, *D.right, D.alphaM, D.betaM);
  return rep;
}

template <class K>
ViolationReport<K> check_bicomodule(const BicomoduleData<K>& D, CheckOptions opt = {}) {
  detail::validate_coalgebra(D.coalgebra);
  if (!D.rho || !D.phi) throw ShapeError("bicomodule: both coactions are required");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dM = D.mdim;
  ck.commute("eq-commute-psiM-omegaM", D.psiM, D.omegaM);
  detail::left_comodule_axioms(ck, D.coalgebra, *D.rho, D.psiM, D.omegaM);
  detail::right_comodule_axioms(ck, D.coalgebra, *D.phi, D.psiM, D.omegaM);
  Mat<K> Rho = D.rho->as_coproduct_map(), Phi = D.phi->as_coproduct_map();
  ck.equal("eq-01.24aa", kron(D.coalgebra.omega, Phi) * Rho,
           kron(Rho, D.coalgebra.psi) * Phi, {dM});
  if (D.deltaM) {
    Mat<K> dMm = D.deltaM->as_coproduct_map();
    const Mat<K>&pM = D.psiM, &oM = D.omegaM;
    ck.equal("eq-M-1.7-psi", kron(pM, pM) * dMm, dMm * pM, {dM});
    ck.equal("eq-M-1.7-omega", kron(oM, oM) * dMm, dMm * oM, {dM});
    ck.equal("eq-M-1.9", kron(dMm, pM) * dMm, kron(oM, dMm) * dMm, {dM});
    ck.equal("eq-bicmodca1", kron(D.coalgebra.omega, dMm) * Rho, kron(Rho, pM) * dMm, {dM});
    ck.equal("eq-bicmodca2", kron(oM, Phi) * dMm, kron(dMm, D.coalgebra.psi) * Phi, {dM});
    ck.equal("eq-bicmodca3", kron(oM, Rho) * dMm, kron(Phi, pM) * dMm, {dM});
  }
  return rep;
}

template <class K>
ViolationReport<K> check_inf_bialgebra(const InfBialgebra<K>& B, CheckOptions opt = {}) {
  detail::validate_algebra(B.algebra());
  detail::validate_coalgebra(B.coalgebra());
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = B.dim;
  detail::algebra_axioms(ck, B.algebra());
  detail::coalgebra_axioms(ck, B.coalgebra());
  const Mat<K>&al = B.alpha, &be = B.beta, &ps = B.psi, &om = B.omega;
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  ck.commute("eq-12.1-alpha-psi", al, ps);
  ck.commute("eq-12.1-alpha-omega", al, om);
  ck.commute("eq-12.1-beta-psi", be, ps);
  ck.commute("eq-12.1-beta-omega", be, om);
  ck.equal("eq-12.2-alpha", kron(al, al) * de, de * al, {d});
  ck.equal("eq-12.2-beta", kron(be, be) * de, de * be, {d});
  ck.equal("eq-12.3-psi", ps * mu, mu * kron(ps, ps), {d, d});
  ck.equal("eq-12.3-omega", om * mu, mu * kron(om, om), {d, d});
  ck.equal("eq-12.4", de * mu,
           kron(mu, be) * kron(om, de) + kron(al, mu) * kron(de, ps) +
               B.lambda * kron(al * om, be * ps),
           {d, d});
  if (B.unit) {
    ck.equal_vec("eq-12.30-psi", ps.apply(*B.unit), *B.unit);
    ck.equal_vec("eq-12.30-omega", om.apply(*B.unit), *B.unit);
  }
  if (B.counit) {
    Mat<K> e = detail::covector_row(*B.counit);
    ck.equal("eq-12.31-alpha", e * al, e, {d});
    ck.equal("eq-12.31-beta", e * be, e, {d});
  }
  return rep;
}

template <class K>
ViolationReport<K> check_left_hopf_module(const LeftHopfModule<K>& H, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  detail::commute_four(ck, "alphaM", H.alphaM, "betaM", H.betaM, "psiM", H.psiM,
                       "omegaM", H.omegaM);
  detail::left_module_axioms(ck, B.algebra(), H.left, H.alphaM, H.betaM);
  detail::left_comodule_axioms(ck, B.coalgebra(), H.rho, H.psiM, H.omegaM);
  Mat<K> L = H.left.as_product_map(), Rho = H.rho.as_coproduct_map();
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  ck.equal("eq-12.13", Rho * L,
           kron(mu, H.betaM) * kron(B.omega, Rho) + kron(B.alpha, L) * kron(de, H.psiM) +
               B.lambda * kron(B.alpha * B.omega, H.betaM * H.psiM),
           {dA, dM});
  return rep;
}

template <class K>
ViolationReport<K> check_right_hopf_module(const RightHopfModule<K>& H, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  detail::commute_four(ck, "alphaM", H.alphaM, "betaM", H.betaM, "psiM", H.psiM,
                       "omegaM", H.omegaM);
  detail::right_module_axioms(ck, B.algebra(), H.right, H.alphaM, H.betaM);
  detail::right_comodule_axioms(ck, B.coalgebra(), H.phi, H.psiM, H.omegaM);
  Mat<K> R = H.right.as_product_map(), Phi = H.phi.as_coproduct_map();
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  ck.equal("eq-12.13a", Phi * R,
           kron(R, B.beta) * kron(H.omegaM, de) + kron(H.alphaM, mu) * kron(Phi, B.psi) +
               B.lambda * kron(H.alphaM * H.omegaM, B.beta * B.psi),
           {dM, dA});
  return rep;
}

/// Full Hopf-bimodule battery: module, comodule, compatibility and Long
/// conditions. The bialgebra itself is checked separately.
template <class K>
ViolationReport<K> check_hopf_bimodule(const HopfBimodule<K>& H, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const InfBialgebra<K>& B = H.bialgebra;
  const int dA = B.dim, dM = H.mdim;
  detail::commute_four(ck, "alphaM", H.alphaM, "betaM", H.betaM, "psiM", H.psiM,
                       "omegaM", H.omegaM);
  detail::left_module_axioms(ck, B.algebra(), H.left, H.alphaM, H.betaM);
  detail::right_module_axioms(ck, B.algebra(), H.right, H.alphaM, H.betaM);
  detail::left_comodule_axioms(ck, B.coalgebra(), H.rho, H.psiM, H.omegaM);
  detail::right_comodule_axioms(ck, B.coalgebra(), H.phi, H.psiM, H.omegaM);
  Mat<K> L = H.left.as_product_map(), R = H.right.as_product_map();
  Mat<K> Rho = H.rho.as_coproduct_map(), Phi = H.phi.as_coproduct_map();
  Mat<K> mu = B.mu.as_product_map(), de = B.delta.as_coproduct_map();
  ck.equal("eq-1.16", L * kron(B.alpha, R), R * kron(L, B.beta), {dA, dM, dA});
  ck.equal("eq-01.24aa", kron(B.omega, Phi) * Rho, kron(Rho, B.psi) * Phi, {dM});
  ck.equal("eq-12.13", Rho * L,
           kron(mu, H.betaM) * kron(B.omega, Rho) + kron(B.alpha, L) * kron(de, H.psiM) +
               B.lambda * kron(B.alpha * B.omega, H.betaM * H.psiM),
           {dA, dM});
  ck.equal("eq-12.13a", Phi * R,
           kron(R, B.beta) * kron(H.omegaM, de) + kron(H.alphaM, mu) * kron(Phi, B.psi) +
               B.lambda * kron(H.alphaM * H.omegaM, B.beta * B.psi),
           {dM, dA});
  ck.equal("eq-20.01", kron(L, B.beta) * kron(B.omega, Phi), Phi * L, {dA, dM});
  ck.equal("eq-20.02", kron(B.alpha, R) * kron(Rho, B.psi), Rho * R, {dM, dA});
  return rep;
}

/// Eqs CO4.67/CO4.20, plus Eqs 20.23/20.24 and map commutation when the
/// module is present. Bimodule axioms of the module live in check_bimodule.
template <class K>
ViolationReport<K> check_rota_baxter(const RotaBaxterData<K>& Rb, CheckOptions opt = {}) {
  detail::validate_algebra(Rb.algebra);
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dA = Rb.algebra.dim;
  Mat<K> mu = Rb.algebra.mu.as_product_map();
  const Mat<K>& RA = Rb.RA;
  Mat<K> idA = Mat<K>::identity(dA);
  ck.commute("eq-CO4.67-alpha", Rb.algebra.alpha, RA);
  ck.commute("eq-CO4.67-beta", Rb.algebra.beta, RA);
  ck.equal("eq-CO4.20", mu * kron(RA, RA),
           RA * mu * kron(idA, RA) + RA * mu * kron(RA, idA) + Rb.lambda * (RA * mu),
           {dA, dA});
  if (Rb.module) {
    const auto& M = *Rb.module;
    const int dM = M.mdim;
    Mat<K> L = M.left.as_product_map(), R = M.right.as_product_map();
    Mat<K> idM = Mat<K>::identity(dM);
    ck.commute("eq-commute-RM-alphaM", M.RM, M.alphaM);
    ck.commute("eq-commute-RM-betaM", M.RM, M.betaM);
    ck.equal("eq-20.23", L * kron(RA, M.RM),
             M.RM * L * kron(idA, M.RM) + M.RM * L * kron(RA, idM) + Rb.lambda * (M.RM * L),
             {dA, dM});
    ck.equal("eq-20.24", R * kron(M.RM, RA),
             M.RM * R * kron(idM, RA) + M.RM * R * kron(M.RM, idA) + Rb.lambda * (M.RM * R),
             {dM, dA});
  }
  return rep;
}

template <class K>
ViolationReport<K> check_dendriform(const DendriformAlgebra<K>& D, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = D.dim;
  Mat<K> P = D.prec.as_product_map(), S = D.succ.as_product_map();
  const Mat<K>&al = D.alpha, &be = D.beta;
  ck.commute("eq-020.07", al, be);
  ck.equal("eq-020.08-prec", al * P, P * kron(al, al), {d, d});
  ck.equal("eq-020.08-succ", al * S, S * kron(al, al), {d, d});
  ck.equal("eq-020.09-prec", be * P, P * kron(be, be), {d, d});
  ck.equal("eq-020.09-succ", be * S, S * kron(be, be), {d, d});
  ck.equal("eq-020.11", P * kron(P, be), P * kron(al, P) + P * kron(al, S), {d, d, d});
  ck.equal("eq-020.12", S * kron(al, P), P * kron(S, be), {d, d, d});
  ck.equal("eq-020.13", S * kron(al, S), S * kron(P, be) + S * kron(S, be), {d, d, d});
  return rep;
}

template <class K>
ViolationReport<K> check_dendriform_bimodule(const DendriformBimodule<K>& D,
                                             CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dA = D.algebra.dim, dM = D.mdim;
  Mat<K> P = D.algebra.prec.as_product_map(), S = D.algebra.succ.as_product_map();
  Mat<K> Pam = D.prec_am.as_product_map(), Sam = D.succ_am.as_product_map();
  Mat<K> Pma = D.prec_ma.as_product_map(), Sma = D.succ_ma.as_product_map();
  const Mat<K>&alA = D.algebra.alpha, &beA = D.algebra.beta;
  const Mat<K>&aM = D.alphaM, &bM = D.betaM;
  ck.commute("eq-commute-alphaM-betaM", aM, bM);
  ck.equal("eq-20.07-am", aM * Pam, Pam * kron(alA, aM), {dA, dM});
  ck.equal("eq-20.07-ma", aM * Pma, Pma * kron(aM, alA), {dM, dA});
  ck.equal("eq-20.08-am", aM * Sam, Sam * kron(alA, aM), {dA, dM});
  ck.equal("eq-20.08-ma", aM * Sma, Sma * kron(aM, alA), {dM, dA});
  ck.equal("eq-20.09-am", bM * Pam, Pam * kron(beA, bM), {dA, dM});
  ck.equal("eq-20.09-ma", bM * Pma, Pma * kron(bM, beA), {dM, dA});
  ck.equal("eq-20.10-am", bM * Sam, Sam * kron(beA, bM), {dA, dM});
  ck.equal("eq-20.10-ma", bM * Sma, Sma * kron(bM, beA), {dM, dA});
  ck.equal("eq-20.11", Pam * kron(P, bM), Pam * kron(alA, Pam) + Pam * kron(alA, Sam),
           {dA, dA, dM});
  ck.equal("eq-20.12", Sam * kron(alA, Pam), Pam * kron(S, bM), {dA, dA, dM});
  ck.equal("eq-20.13", Sam * kron(alA, Sam), Sam * kron(P, bM) + Sam * kron(S, bM),
           {dA, dA, dM});
  ck.equal("eq-20.14", Pma * kron(Pam, beA), Pam * kron(alA, Pma) + Pam * kron(alA, Sma),
           {dA, dM, dA});
  ck.equal("eq-20.15", Sam * kron(alA, Pma), Pma * kron(Sam, beA), {dA, dM, dA});
  ck.equal("eq-20.16", Sam * kron(alA, Sma), Sma * kron(Pam, beA) + Sma * kron(Sam, beA),
           {dA, dM, dA});
  ck.equal("eq-20.17", Pma * kron(Pma, beA), Pma * kron(aM, P) + Pma * kron(aM, S),
           {dM, dA, dA});
  ck.equal("eq-20.18", Sma * kron(aM, P), Pma * kron(Sma, beA), {dM, dA, dA});
  ck.equal("eq-20.19", Sma * kron(aM, S), Sma * kron(Pma, beA) + Sma * kron(Sma, beA),
           {dM, dA, dA});
  return rep;
}

template <class K>
ViolationReport<K> check_prelie(const PreLieAlgebra<K>& P, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = P.dim;
  Mat<K> C = P.circ.as_product_map();
  const Mat<K>&al = P.alpha, &be = P.beta;
  Mat<K> id = Mat<K>::identity(d);
  ck.commute("eq-commute-alpha-beta", al, be);
  ck.equal("eq-prelie-alpha", al * C, C * kron(al, al), {d, d});
  ck.equal("eq-prelie-beta", be * C, C * kron(be, be), {d, d});
  // twisted associator, must be symmetric in the first two arguments
  Mat<K> X = C * kron(al * be, C * kron(al, id)) - C * kron(C * kron(be, al), be);
  ck.equal("eq-13.1", X, X * kron(flip<K>(d), id), {d, d, d});
  return rep;
}

template <class K>
ViolationReport<K> check_prelie_bimodule(const PreLieBimodule<K>& P, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dA = P.algebra.dim, dM = P.mdim;
  Mat<K> C = P.algebra.circ.as_product_map();
  Mat<K> Cl = P.circL.as_product_map(), Cr = P.circR.as_product_map();
  const Mat<K>&alA = P.algebra.alpha, &beA = P.algebra.beta;
  const Mat<K>&aM = P.alphaM, &bM = P.betaM;
  Mat<K> idA = Mat<K>::identity(dA), idM = Mat<K>::identity(dM);
  ck.commute("eq-commute-alphaM-betaM", aM, bM);
  ck.equal("eq-20.03-l", aM * Cl, Cl * kron(alA, aM), {dA, dM});
  ck.equal("eq-20.03-r", aM * Cr, Cr * kron(aM, alA), {dM, dA});
  ck.equal("eq-20.04-l", bM * Cl, Cl * kron(beA, bM), {dA, dM});
  ck.equal("eq-20.04-r", bM * Cr, Cr * kron(bM, beA), {dM, dA});
  Mat<K> Y = Cl * kron(alA * beA, Cl * kron(alA, idM)) - Cl * kron(C * kron(beA, alA), bM);
  ck.equal("eq-20.05", Y, Y * kron(flip<K>(dA), idM), {dA, dA, dM});
  Mat<K> lhs =
      Cl * kron(alA * beA, Cr * kron(aM, idA)) - Cr * kron(Cl * kron(beA, aM), beA);
  Mat<K> rhs_mc =
      Cr * kron(aM * bM, C * kron(alA, idA)) - Cr * kron(Cr * kron(bM, alA), beA);
  ck.equal("eq-20.06", lhs, rhs_mc * kron(flip<K>(dA, dM), idA), {dA, dM, dA});
  return rep;
}

/// Eq 13.03 only; a BiHom-Novikov algebra is a pre-Lie algebra satisfying it.
template <class K>
ViolationReport<K> check_novikov(const PreLieAlgebra<K>& P, CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = P.dim;
  Mat<K> C = P.circ.as_product_map();
  Mat<K> id = Mat<K>::identity(d);
  Mat<K> W = C * kron(C * kron(id, P.beta), P.alpha * P.beta);
  ck.equal("eq-13.03", W, W * kron(id, flip<K>(d)), {d, d, d});
  return rep;
}

template <class K>
ViolationReport<K> check_novikov_poisson(const NovikovPoissonData<K>& N,
                                         CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = N.dim;
  const Mat<K>&al = N.alpha, &be = N.beta;
  Mat<K> id = Mat<K>::identity(d);
  Mat<K> dot = N.dot.as_product_map(), star = N.star.as_product_map();
  ck.commute("eq-commute-alpha-beta", al, be);
  // (1) dot is BiHom-commutative
  ck.equal("eq-1.2-alpha", al * dot, dot * kron(al, al), {d, d});
  ck.equal("eq-1.2-beta", be * dot, dot * kron(be, be), {d, d});
  ck.equal("eq-1.3", dot * kron(al, dot), dot * kron(dot, be), {d, d, d});
  Mat<K> comm = dot * kron(be, al);
  ck.equal("eq-13.3", comm, comm * flip<K>(d), {d, d});
  // (2) star is BiHom-Novikov
  ck.equal("eq-prelie-alpha", al * star, star * kron(al, al), {d, d});
  ck.equal("eq-prelie-beta", be * star, star * kron(be, be), {d, d});
  Mat<K> X = star * kron(al * be, star * kron(al, id)) - star * kron(star * kron(be, al), be);
  ck.equal("eq-13.1", X, X * kron(flip<K>(d), id), {d, d, d});
  Mat<K> W = star * kron(star * kron(id, be), al * be);
  ck.equal("eq-13.03", W, W * kron(id, flip<K>(d)), {d, d, d});
  // (3) compatibilities
  Mat<K> T = dot * kron(star * kron(be, al), be) - star * kron(al * be, dot * kron(al, id));
  ck.equal("eq-B022.022", T, T * kron(flip<K>(d), id), {d, d, d});
  ck.equal("eq-B022.023", star * kron(dot * kron(id, be), al * be),
           dot * kron(star * kron(id, be), al * be) * kron(id, flip<K>(d)), {d, d, d});
  ck.equal("eq-B022.024", dot * kron(al, star), star * kron(dot, be), {d, d, d});
  return rep;
}

/// Module-coalgebra compatibilities (eq-modcoalg1..5) plus map commutation.
/// eq-modcoalg3 and eq-modcoalg5 are stated in their type-correct form:
/// psi_M/omega_M distribute over the right action, and modcoalg5 twists the
/// algebra input by psi_A.
template <class K>
ViolationReport<K> check_module_coalgebra(const InfBialgebra<K>& B, const Tensor3<K>& lft,
                                          const Tensor3<K>& rgt, const Mat<K>& aM,
                                          const Mat<K>& bM, const Tensor3<K>& deltaM,
                                          const Mat<K>& pM, const Mat<K>& oM,
                                          CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dA = B.dim, dM = lft.dim1();
  detail::commute_four(ck, "alphaM", aM, "betaM", bM, "psiM", pM, "omegaM", oM);
  Mat<K> L = lft.as_product_map(), R = rgt.as_product_map();
  Mat<K> dMm = deltaM.as_coproduct_map();
  ck.equal("eq-modcoalg1-alpha", dMm * aM, kron(aM, aM) * dMm, {dM});
  ck.equal("eq-modcoalg1-beta", dMm * bM, kron(bM, bM) * dMm, {dM});
  ck.equal("eq-modcoalg2-psi", pM * L, L * kron(B.psi, pM), {dA, dM});
  ck.equal("eq-modcoalg2-omega", oM * L, L * kron(B.omega, oM), {dA, dM});
  ck.equal("eq-modcoalg3-psi", pM * R, R * kron(pM, B.psi), {dM, dA});
  ck.equal("eq-modcoalg3-omega", oM * R, R * kron(oM, B.omega), {dM, dA});
  ck.equal("eq-modcoalg4", dMm * L, kron(L, bM) * kron(B.omega, dMm), {dA, dM});
  ck.equal("eq-modcoalg5", dMm * R, kron(aM, R) * kron(dMm, B.psi), {dM, dA});
  return rep;
}

template <class K>
ViolationReport<K> check_comodule_algebra(const InfBialgebra<K>& B, const Tensor3<K>& rho,
                                          const Tensor3<K>& phi, const Mat<K>& pM,
                                          const Mat<K>& oM, const Tensor3<K>& muM,
                                          const Mat<K>& aM, const Mat<K>& bM,
                                          CheckOptions opt = {}) {
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dM = rho.dim1();
  detail::commute_four(ck, "alphaM", aM, "betaM", bM, "psiM", pM, "omegaM", oM);
  Mat<K> Rho = rho.as_coproduct_map(), Phi = phi.as_coproduct_map();
  Mat<K> mM = muM.as_product_map();
  ck.equal("eq-comodalg1-psi", pM * mM, mM * kron(pM, pM), {dM, dM});
  ck.equal("eq-comodalg1-omega", oM * mM, mM * kron(oM, oM), {dM, dM});
  ck.equal("eq-comodalg2-alpha", kron(B.alpha, aM) * Rho, Rho * aM, {dM});
  ck.equal("eq-comodalg2-beta", kron(B.beta, bM) * Rho, Rho * bM, {dM});
  ck.equal("eq-comodalg3-alpha", kron(aM, B.alpha) * Phi, Phi * aM, {dM});
  ck.equal("eq-comodalg3-beta", kron(bM, B.beta) * Phi, Phi * bM, {dM});
  ck.equal("eq-comodalg4", Rho * mM, kron(B.alpha, mM) * kron(Rho, pM), {dM, dM});
  ck.equal("eq-comodalg5", Phi * mM, kron(mM, B.beta) * kron(oM, Phi), {dM, dM});
  return rep;
}

/// Eq yd, condition (d) of the biproduct theorem.
template <class K>
ViolationReport<K> check_yd(const HopfBimodule<K>& H, CheckOptions opt = {}) {
  if (!H.muM || !H.deltaM) throw ShapeError("eq-yd needs muM and deltaM");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int dM = H.mdim;
  Mat<K> L = H.left.as_product_map(), R = H.right.as_product_map();
  Mat<K> Rho = H.rho.as_coproduct_map(), Phi = H.phi.as_coproduct_map();
  Mat<K> mM = H.muM->as_product_map(), dMm = H.deltaM->as_coproduct_map();
  const Mat<K>&aM = H.alphaM, &bM = H.betaM, &pM = H.psiM, &oM = H.omegaM;
  ck.equal("eq-yd", dMm * mM,
           kron(mM, bM) * kron(oM, dMm) + kron(aM, mM) * kron(dMm, pM) +
               H.bialgebra.lambda * kron(aM * oM, bM * pM) + kron(R, bM) * kron(oM, Rho) +
               kron(aM, L) * kron(Phi, pM),
           {dM, dM});
  return rep;
}

/// Eq deri with algebra-map preconditions on xi and zeta checked first.
template <class K>
ViolationReport<K> check_derivation(const BiHomAlgebra<K>& A, const Mat<K>& D,
                                    const Mat<K>& xi, const Mat<K>& zeta, const K& lambda,
                                    CheckOptions opt = {}) {
  detail::validate_algebra(A);
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = A.dim;
  Mat<K> mu = A.mu.as_product_map();
  ck.equal("eq-deri-xi-map", xi * mu, mu * kron(xi, xi), {d, d});
  ck.equal("eq-deri-zeta-map", zeta * mu, mu * kron(zeta, zeta), {d, d});
  ck.equal("eq-deri", D * mu,
           mu * kron(xi, D) + mu * kron(D, zeta) + lambda * (mu * kron(xi, zeta)), {d, d});
  return rep;
}

}  // namespace bihom
