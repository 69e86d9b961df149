#pragma once

#include <string>

#include "constructions.hpp"

namespace bihom {

// Quasitriangular machinery. r lives in A(x)A as the matrix r(i,j); sigma in
// (C(x)C)* as sigma(i,j) = sigma(e_i, e_j). Elements of A(x)A(x)A are flat
// vectors on the row-major triple basis.

namespace detail {

template <class K>
void accumulate3(Vec<K>& target, const K& c, const Vec<K>& u, const Vec<K>& v,
                 const Vec<K>& w) {
  const int d2 = int(v.size()), d3 = int(w.size());
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == K(0)) continue;
    for (int j = 0; j < d2; ++j) {
      if (v[j] == K(0)) continue;
      K uv = c * u[i] * v[j];
      for (int k = 0; k < d3; ++k)
        if (!(w[k] == K(0))) target[(i * d2 + j) * d3 + k] += uv * w[k];
    }
  }
}

}  // namespace detail

/// The displayed triple-tensor elements built from r (two copies r and rbar)
/// in a unital BiHom-algebra with extra maps psi, omega:
///   r12 r23 = alpha(r1) (x) r2 rbar1 (x) beta(rbar2)
///   r13 r12 = omega(r1) rbar1 (x) beta(rbar2) (x) alpha psi(r2)
///   r23 r13 = beta omega(r1) (x) alpha(rbar1) (x) rbar2 psi(r2)
///   r13     = omega(r1) (x) 1 (x) psi(r2)
/// plus the plain embeddings r12 = r1 (x) r2 (x) 1 and r23 = 1 (x) r1 (x) r2
/// that the side conditions of the quasitriangular propositions use.
template <class K>
struct RProducts {
  Vec<K> r13r12, r12r23, r23r13, r13, r12, r23;
};

template <class K>
RProducts<K> r_products(const BiHomAlgebra<K>& A, const Mat<K>& psi, const Mat<K>& omega,
                        const Mat<K>& r) {
  detail::validate_algebra(A);
  if (!A.unit) throw ShapeError("abhYBe elements need a unital algebra");
  const int d = A.dim;
  if (r.rows() != d || r.cols() != d) throw ShapeError("r shape mismatch");
  const Vec<K>& one = *A.unit;
  std::vector<Vec<K>> e(d), al_e(d), be_e(d), ps_e(d), om_e(d), alps_e(d), beom_e(d);
  for (int i = 0; i < d; ++i) {
    e[i] = basis_vec<K>(d, i);
    al_e[i] = A.alpha.apply(e[i]);
    be_e[i] = A.beta.apply(e[i]);
    ps_e[i] = psi.apply(e[i]);
    om_e[i] = omega.apply(e[i]);
    alps_e[i] = A.alpha.apply(ps_e[i]);
    beom_e[i] = A.beta.apply(om_e[i]);
  }
  RProducts<K> P;
  const int d3 = d * d * d;
  P.r13r12 = Vec<K>(d3, K(0));
  P.r12r23 = Vec<K>(d3, K(0));
  P.r23r13 = Vec<K>(d3, K(0));
  P.r13 = Vec<K>(d3, K(0));
  P.r12 = Vec<K>(d3, K(0));
  P.r23 = Vec<K>(d3, K(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const K& rij = r(i, j);
      if (rij == K(0)) continue;
      detail::accumulate3(P.r13, rij, om_e[i], one, ps_e[j]);
      detail::accumulate3(P.r12, rij, e[i], e[j], one);
      detail::accumulate3(P.r23, rij, one, e[i], e[j]);
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const K& rkl = r(k, l);
          if (rkl == K(0)) continue;
          K c = rij * rkl;
          detail::accumulate3(P.r12r23, c, al_e[i], eval_mul(A.mu, e[j], e[k]), be_e[l]);
          detail::accumulate3(P.r13r12, c, eval_mul(A.mu, om_e[i], e[k]), be_e[l],
                              alps_e[j]);
          detail::accumulate3(P.r23r13, c, beom_e[i], al_e[k],
                              eval_mul(A.mu, e[l], ps_e[j]));
        }
    }
  return P;
}

/// r13 r12 - r12 r23 + r23 r13 - lambda r13, exactly.
template <class K>
Vec<K> abhybe_residual(const BiHomAlgebra<K>& A, const Mat<K>& psi, const Mat<K>& omega,
                       const Mat<K>& r, const K& lambda) {
  RProducts<K> P = r_products(A, psi, omega, r);
  return P.r13r12 - P.r12r23 + P.r23r13 - lambda * P.r13;
}

/// The invariants of a quasitriangular candidate: r is alpha,beta,psi,omega-
/// invariant (read as (f(x)f)(r) = r), Eqs 12.1/12.3/12.30 hold, and r solves
/// the lambda-abhYBe (quasi) resp. the (-lambda)-abhYBe (anti).
template <class K>
ViolationReport<K> check_qt(const QtStructure<K>& Q, CheckOptions opt = {}) {
  detail::validate_algebra(Q.base);
  if (!Q.base.unit) throw ShapeError("qt: base algebra must be unital");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = Q.base.dim;
  auto flat = [&](const Mat<K>& m) {
    Vec<K> v(size_t(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v[size_t(i) * d + j] = m(i, j);
    return v;
  };
  const Mat<K>* fs[4] = {&Q.base.alpha, &Q.base.beta, &Q.psi, &Q.omega};
  const char* ns[4] = {"alpha", "beta", "psi", "omega"};
  for (int i = 0; i < 4; ++i)
    ck.equal_vec(std::string("eq-r-invariant-") + ns[i],
                 flat(*fs[i] * Q.r * fs[i]->transpose()), flat(Q.r));
  ck.commute("eq-12.1-alpha-psi", Q.base.alpha, Q.psi);
  ck.commute("eq-12.1-alpha-omega", Q.base.alpha, Q.omega);
  ck.commute("eq-12.1-beta-psi", Q.base.beta, Q.psi);
  ck.commute("eq-12.1-beta-omega", Q.base.beta, Q.omega);
  Mat<K> mu = Q.base.mu.as_product_map();
  ck.equal("eq-12.3-psi", Q.psi * mu, mu * kron(Q.psi, Q.psi), {d, d});
  ck.equal("eq-12.3-omega", Q.omega * mu, mu * kron(Q.omega, Q.omega), {d, d});
  ck.equal_vec("eq-12.30-psi", Q.psi.apply(*Q.base.unit), *Q.base.unit);
  ck.equal_vec("eq-12.30-omega", Q.omega.apply(*Q.base.unit), *Q.base.unit);
  K w = Q.kind == QtKind::quasi ? Q.lambda : -Q.lambda;
  Vec<K> res = abhybe_residual(Q.base, Q.psi, Q.omega, Q.r, w);
  ck.equal_vec("eq-waybe", res, Vec<K>(res.size(), K(0)));
  return rep;
}

/// The induced coproduct Delta_r (quasi) resp. its anti variant. The
/// validation report also carries the side conditions eq-14.8/eq-14.9
/// resp. eq-14.28/eq-14.29.
template <class K>
BuildResult<K, InfBialgebra<K>> delta_r(const QtStructure<K>& Q, CheckOptions opt = {}) {
  BuildResult<K, InfBialgebra<K>> out;
  out.preconditions = check_bihom_algebra(Q.base, opt);
  out.preconditions.merge(check_qt(Q, opt));
  if (!out.preconditions.passed()) return out;

  const int d = Q.base.dim;
  Mat<K> ali = invert(Q.base.alpha), bei = invert(Q.base.beta);
  Mat<K> om_ali = Q.omega * ali, ps_bei = Q.psi * bei;
  const Vec<K>& one = *Q.base.unit;
  Mat<K> de_r(d * d, d);
  for (int a = 0; a < d; ++a) {
    Vec<K> ea = basis_vec<K>(d, a);
    Vec<K> col(size_t(d) * d, K(0));
    Vec<K> lft = om_ali.apply(ea), rgt = ps_bei.apply(ea);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> t1 = tensor_prod(eval_mul(Q.base.mu, lft, basis_vec<K>(d, i)),
                                Q.base.beta.apply(basis_vec<K>(d, j)));
        Vec<K> t2 = tensor_prod(Q.base.alpha.apply(basis_vec<K>(d, i)),
                                eval_mul(Q.base.mu, basis_vec<K>(d, j), rgt));
        col = col + rij * t1 - rij * t2;
      }
    Vec<K> t3 = Q.kind == QtKind::quasi ? tensor_prod(Q.omega.apply(ea), one)
                                        : tensor_prod(one, Q.psi.apply(ea));
    col = col - Q.lambda * t3;
    for (int x = 0; x < d * d; ++x) de_r(x, a) = col[x];
  }

  InfBialgebra<K> B;
  B.dim = d;
  B.lambda = Q.lambda;
  B.mu = Q.base.mu;
  B.delta = Tensor3<K>::from_coproduct_map(de_r, d, d);
  B.alpha = Q.base.alpha;
  B.beta = Q.base.beta;
  B.psi = Q.psi;
  B.omega = Q.omega;
  B.unit = Q.base.unit;
  out.validation = check_inf_bialgebra(B, opt);
  {
    Checker<K> ck(out.validation, opt);
    RProducts<K> P = r_products(Q.base, Q.psi, Q.omega, Q.r);
    Vec<K> de_psi_r(size_t(d) * d * d, K(0));  // (Delta (x) psi)(r)
    Vec<K> om_de_r(size_t(d) * d * d, K(0));   // (omega (x) Delta)(r)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> di = de_r.col(i), dj = de_r.col(j);
        Vec<K> pj = Q.psi.apply(basis_vec<K>(d, j));
        Vec<K> oi = Q.omega.apply(basis_vec<K>(d, i));
        for (int x = 0; x < d * d; ++x) {
          if (!(di[x] == K(0)))
            for (int y = 0; y < d; ++y)
              if (!(pj[y] == K(0))) de_psi_r[size_t(x) * d + y] += rij * di[x] * pj[y];
          if (!(dj[x] == K(0)))
            for (int y = 0; y < d; ++y)
              if (!(oi[y] == K(0))) om_de_r[size_t(y) * d * d + x] += rij * oi[y] * dj[x];
        }
      }
    if (Q.kind == QtKind::quasi) {
      ck.equal_vec("eq-14.8", de_psi_r, K(-1) * P.r23r13);
      ck.equal_vec("eq-14.9", om_de_r, P.r13r12 - Q.lambda * (P.r13 + P.r12));
    } else {
      ck.equal_vec("eq-14.28", de_psi_r, K(-1) * P.r23r13 - Q.lambda * (P.r23 + P.r13));
      ck.equal_vec("eq-14.29", om_de_r, P.r13r12);
    }
  }
  out.value = std::move(B);
  return out;
}

/// Rota-Baxter operators induced by a (anti)quasitriangular
/// structure on an arbitrary bimodule with invertible alphaM/betaM.
template <class K>
BuildResult<K, RotaBaxterData<K>> qt_rota_baxter(const QtStructure<K>& Q,
                                                 const BimoduleData<K>& M,
                                                 CheckOptions opt = {}) {
  detail::require_equal_algebra(M.algebra, Q.base, "qt-rota-baxter");
  if (!M.left || !M.right) throw ShapeError("qt-rota-baxter: module needs both actions");
  BuildResult<K, RotaBaxterData<K>> out;
  out.preconditions = check_qt(Q, opt);
  out.preconditions.merge(check_bimodule(M, opt));
  if (!out.preconditions.passed()) return out;

  const int d = Q.base.dim, dM = M.mdim;
  Mat<K> ali = invert(Q.base.alpha), bei = invert(Q.base.beta);
  Mat<K> aMi = invert(M.alphaM), bMi = invert(M.betaM);
  K sign = Q.kind == QtKind::quasi ? K(-1) : K(1);

  Mat<K> be2ps = Q.base.beta * Q.base.beta * Q.psi;
  Mat<K> alom = Q.base.alpha * Q.omega;
  Mat<K> RA(d, d), RM(dM, dM);
  for (int a = 0; a < d; ++a) {
    Vec<K> mid = (ali * bei).apply(basis_vec<K>(d, a));
    Vec<K> acc(d, K(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> inner = eval_mul(Q.base.mu, mid, alom.apply(basis_vec<K>(d, j)));
        acc = acc + rij * eval_mul(Q.base.mu, be2ps.apply(basis_vec<K>(d, i)), inner);
      }
    for (int k = 0; k < d; ++k) RA(k, a) = sign * acc[k];
  }
  for (int m = 0; m < dM; ++m) {
    Vec<K> mid = (aMi * bMi).apply(basis_vec<K>(dM, m));
    Vec<K> acc(dM, K(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> inner = eval_right_act(*M.right, mid, alom.apply(basis_vec<K>(d, j)));
        acc = acc + rij * eval_left_act(*M.left, be2ps.apply(basis_vec<K>(d, i)), inner);
      }
    for (int k = 0; k < dM; ++k) RM(k, m) = sign * acc[k];
  }

  RotaBaxterData<K> rb;
  rb.algebra = Q.base;
  rb.lambda = Q.lambda;
  rb.RA = RA;
  rb.module = RotaBaxterModule<K>{dM, *M.left, *M.right, M.alphaM, M.betaM, RM};
  out.validation = check_rota_baxter(rb, opt);
  out.value = std::move(rb);
  return out;
}

namespace detail {

template <class K>
void require_module_maps(const BimoduleData<K>& M, const char* what) {
  if (!M.psiM || !M.omegaM)
    throw ShapeError(std::string(what) + ": module needs psiM and omegaM");
}

}  // namespace detail

/// Induced left coaction over the Delta_r bialgebra; the anti kind adds
/// the extra weight term on the unit leg.
template <class K>
BuildResult<K, LeftHopfModule<K>> qt_left_coaction(const QtStructure<K>& Q,
                                                   const BimoduleData<K>& M,
                                                   CheckOptions opt = {}) {
  detail::require_equal_algebra(M.algebra, Q.base, "qt-left-coaction");
  if (!M.left) throw ShapeError("qt-left-coaction: module needs a left action");
  detail::require_module_maps(M, "qt-left-coaction");
  BuildResult<K, LeftHopfModule<K>> out;
  auto br = delta_r(Q, opt);
  out.preconditions = br.preconditions;
  {
    Checker<K> ck(out.preconditions, opt);
    const int dA = Q.base.dim, dM = M.mdim;
    Mat<K> L = M.left->as_product_map();
    ck.commute("pre-commute-betaM-psiM", M.betaM, *M.psiM);
    ck.equal("pre-psiM-action", (*M.psiM) * L, L * kron(Q.psi, *M.psiM), {dA, dM});
  }
  out.preconditions.merge(check_left_module(M, opt));
  if (!out.preconditions.passed() || !br.value) return out;

  const int d = Q.base.dim, dM = M.mdim;
  Mat<K> target = (*M.psiM) * invert(M.betaM);
  Mat<K> rho(d * dM, dM);
  for (int m = 0; m < dM; ++m) {
    Vec<K> mm = target.apply(basis_vec<K>(dM, m));
    Vec<K> col(size_t(d) * dM, K(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> t = tensor_prod(Q.base.alpha.apply(basis_vec<K>(d, i)),
                               eval_left_act(*M.left, basis_vec<K>(d, j), mm));
        col = col - rij * t;
      }
    if (Q.kind == QtKind::anti)
      col = col - Q.lambda * tensor_prod(*Q.base.unit, M.psiM->apply(basis_vec<K>(dM, m)));
    for (int x = 0; x < d * dM; ++x) rho(x, m) = col[x];
  }

  LeftHopfModule<K> H{*br.value, dM, *M.left, Tensor3<K>::from_coproduct_map(rho, d, dM),
                      M.alphaM, M.betaM, *M.psiM, *M.omegaM};
  out.validation = br.validation;
  out.validation.merge(check_left_hopf_module(H, opt));
  out.value = std::move(H);
  return out;
}

/// Induced right coaction over the Delta_r bialgebra; here the weight term
/// belongs to the quasi kind.
template <class K>
BuildResult<K, RightHopfModule<K>> qt_right_coaction(const QtStructure<K>& Q,
                                                     const BimoduleData<K>& M,
                                                     CheckOptions opt = {}) {
  detail::require_equal_algebra(M.algebra, Q.base, "qt-right-coaction");
  if (!M.right) throw ShapeError("qt-right-coaction: module needs a right action");
  detail::require_module_maps(M, "qt-right-coaction");
  BuildResult<K, RightHopfModule<K>> out;
  auto br = delta_r(Q, opt);
  out.preconditions = br.preconditions;
  {
    Checker<K> ck(out.preconditions, opt);
    const int dA = Q.base.dim, dM = M.mdim;
    Mat<K> R = M.right->as_product_map();
    ck.commute("pre-commute-alphaM-omegaM", M.alphaM, *M.omegaM);
    ck.equal("pre-omegaM-action", (*M.omegaM) * R, R * kron(*M.omegaM, Q.omega), {dM, dA});
  }
  out.preconditions.merge(check_right_module(M, opt));
  if (!out.preconditions.passed() || !br.value) return out;

  const int d = Q.base.dim, dM = M.mdim;
  Mat<K> source = (*M.omegaM) * invert(M.alphaM);
  Mat<K> phi(dM * d, dM);
  for (int m = 0; m < dM; ++m) {
    Vec<K> mm = source.apply(basis_vec<K>(dM, m));
    Vec<K> col(size_t(dM) * d, K(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const K& rij = Q.r(i, j);
        if (rij == K(0)) continue;
        Vec<K> t = tensor_prod(eval_right_act(*M.right, mm, basis_vec<K>(d, i)),
                               Q.base.beta.apply(basis_vec<K>(d, j)));
        col = col + rij * t;
      }
    if (Q.kind == QtKind::quasi)
      col = col -
            Q.lambda * tensor_prod(M.omegaM->apply(basis_vec<K>(dM, m)), *Q.base.unit);
    for (int x = 0; x < dM * d; ++x) phi(x, m) = col[x];
  }

  RightHopfModule<K> H{*br.value, dM, *M.right, Tensor3<K>::from_coproduct_map(phi, dM, d),
                       M.alphaM, M.betaM, *M.psiM, *M.omegaM};
  out.validation = br.validation;
  out.validation.merge(check_right_hopf_module(H, opt));
  out.value = std::move(H);
  return out;
}

/// Both induced coactions together turn a bimodule into a Hopf bimodule.
template <class K>
BuildResult<K, HopfBimodule<K>> qt_hopf_bimodule(const QtStructure<K>& Q,
                                                 const BimoduleData<K>& M,
                                                 CheckOptions opt = {}) {
  detail::require_equal_algebra(M.algebra, Q.base, "qt-hopf-bimodule");
  if (!M.left || !M.right) throw ShapeError("qt-hopf-bimodule: module needs both actions");
  detail::require_module_maps(M, "qt-hopf-bimodule");
  BuildResult<K, HopfBimodule<K>> out;
  auto lc = qt_left_coaction(Q, M, opt);
  auto rc = qt_right_coaction(Q, M, opt);
  out.preconditions = lc.preconditions;
  out.preconditions.merge(rc.preconditions);
  out.preconditions.merge(check_bimodule(M, opt));
  if (!lc.value || !rc.value || !out.preconditions.passed()) return out;

  HopfBimodule<K> H;
  H.bialgebra = lc.value->bialgebra;
  H.mdim = M.mdim;
  H.left = *M.left;
  H.right = *M.right;
  H.rho = lc.value->rho;
  H.phi = rc.value->phi;
  H.alphaM = M.alphaM;
  H.betaM = M.betaM;
  H.psiM = *M.psiM;
  H.omegaM = *M.omegaM;
  out.validation = check_inf_bialgebra(H.bialgebra, opt);
  out.validation.merge(check_hopf_bimodule(H, opt));
  out.value = std::move(H);
  return out;
}

// ---------------------------------------------------------------------------
// Coquasitriangular side

/// Scalar-valued residual of the coassociative BiHom-Yang-Baxter equation on
/// all basis triples (c,d,e), as a flat tensor of size dim^3.
template <class K>
Vec<K> coabhybe_residual(const BiHomCoalgebra<K>& C, const Mat<K>& alpha,
                         const Mat<K>& beta, const Mat<K>& sigma, const K& lambda) {
  detail::validate_coalgebra(C);
  if (!C.counit) throw ShapeError("coabhYBe needs a counital coalgebra");
  const int d = C.dim;
  if (sigma.rows() != d || sigma.cols() != d) throw ShapeError("sigma shape mismatch");
  Mat<K> at = alpha.transpose(), pt = C.psi.transpose(), ot = C.omega.transpose();
  Mat<K> m1 = at * sigma * (beta * C.omega);            // sigma(alpha(p), beta omega(e))
  Mat<K> m2 = sigma * C.psi;                            // sigma(q, psi(d))
  Mat<K> m3 = ot * sigma;                               // sigma(omega(c), p)
  Mat<K> m6 = (alpha * C.psi).transpose() * sigma * beta;  // sigma(alpha psi(c), beta(q))
  Mat<K> m7 = at * sigma * beta;                        // sigma(alpha(c), beta(e))
  const Vec<K>& eps = *C.counit;
  std::vector<Mat<K>> D(d);
  for (int k = 0; k < d; ++k) D[k] = eval_delta(C.delta, basis_vec<K>(d, k));
  Vec<K> res(size_t(d) * d * d, K(0));
  for (int c = 0; c < d; ++c)
    for (int dd = 0; dd < d; ++dd)
      for (int ee = 0; ee < d; ++ee) {
        K v(0);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) {
            if (!(D[c](p, q) == K(0))) v += D[c](p, q) * m1(p, ee) * m2(q, dd);
            if (!(D[dd](p, q) == K(0))) v -= D[dd](p, q) * m3(c, p) * m2(q, ee);
            if (!(D[ee](p, q) == K(0))) v += D[ee](p, q) * m3(dd, p) * m6(c, q);
          }
        v -= lambda * m7(c, ee) * eps[dd];
        res[(size_t(c) * d + dd) * d + ee] = v;
      }
  return res;
}

template <class K>
ViolationReport<K> check_coqt(const CoqtStructure<K>& C, CheckOptions opt = {}) {
  detail::validate_coalgebra(C.base);
  if (!C.base.counit) throw ShapeError("coqt: base coalgebra must be counital");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  const int d = C.base.dim;
  auto flat = [&](const Mat<K>& m) {
    Vec<K> v(size_t(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v[size_t(i) * d + j] = m(i, j);
    return v;
  };
  const Mat<K>* fs[4] = {&C.alpha, &C.beta, &C.base.psi, &C.base.omega};
  const char* ns[4] = {"alpha", "beta", "psi", "omega"};
  for (int i = 0; i < 4; ++i)
    ck.equal_vec(std::string("eq-sigma-invariant-") + ns[i],
                 flat(fs[i]->transpose() * C.sigma * (*fs[i])), flat(C.sigma));
  ck.commute("eq-12.1-alpha-psi", C.alpha, C.base.psi);
  ck.commute("eq-12.1-alpha-omega", C.alpha, C.base.omega);
  ck.commute("eq-12.1-beta-psi", C.beta, C.base.psi);
  ck.commute("eq-12.1-beta-omega", C.beta, C.base.omega);
  Mat<K> de = C.base.delta.as_coproduct_map();
  ck.equal("eq-12.2-alpha", kron(C.alpha, C.alpha) * de, de * C.alpha, {d});
  ck.equal("eq-12.2-beta", kron(C.beta, C.beta) * de, de * C.beta, {d});
  Mat<K> e = detail::covector_row(*C.base.counit);
  ck.equal("eq-12.31-alpha", e * C.alpha, e, {d});
  ck.equal("eq-12.31-beta", e * C.beta, e, {d});
  K w = C.kind == QtKind::quasi ? C.lambda : -C.lambda;
  Vec<K> res = coabhybe_residual(C.base, C.alpha, C.beta, C.sigma, w);
  ck.equal_vec("eq-cowaybe", res, Vec<K>(res.size(), K(0)));
  return rep;
}

/// Eq 01.04 (quasi) resp. Eq 01.08 (anti); side conditions Eqs 01.06/01.07
/// resp. 01.10/01.11 are verified into the validation report.
template <class K>
BuildResult<K, InfBialgebra<K>> mu_sigma(const CoqtStructure<K>& C, CheckOptions opt = {}) {
  BuildResult<K, InfBialgebra<K>> out;
  out.preconditions = check_bihom_coalgebra(C.base, opt);
  out.preconditions.merge(check_coqt(C, opt));
  if (!out.preconditions.passed()) return out;

  const int d = C.base.dim;
  Mat<K> psi_i = invert(C.base.psi), om_i = invert(C.base.omega);
  Mat<K> al_omi = C.alpha * om_i, be_psii = C.beta * psi_i;
  Mat<K> m2 = C.sigma * C.base.psi;        // sigma(q, psi(d))
  Mat<K> m8 = C.base.omega.transpose() * C.sigma;  // sigma(omega(c), p)
  const Vec<K>& eps = *C.base.counit;
  std::vector<Mat<K>> D(d);
  for (int k = 0; k < d; ++k) D[k] = eval_delta(C.base.delta, basis_vec<K>(d, k));

  Mat<K> mu(d, d * d);
  for (int c = 0; c < d; ++c)
    for (int dd = 0; dd < d; ++dd) {
      Vec<K> col(d, K(0));
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          if (!(D[c](p, q) == K(0)))
            col = col + (D[c](p, q) * m2(q, dd)) * al_omi.apply(basis_vec<K>(d, p));
          if (!(D[dd](p, q) == K(0)))
            col = col - (D[dd](p, q) * m8(c, p)) * be_psii.apply(basis_vec<K>(d, q));
        }
      if (C.kind == QtKind::quasi)
        col = col - (C.lambda * eps[dd]) * C.alpha.apply(basis_vec<K>(d, c));
      else
        col = col - (C.lambda * eps[c]) * C.beta.apply(basis_vec<K>(d, dd));
      for (int k = 0; k < d; ++k) mu(k, c * d + dd) = col[k];
    }

  InfBialgebra<K> B;
  B.dim = d;
  B.lambda = C.lambda;
  B.mu = Tensor3<K>::from_product_map(mu, d, d);
  B.delta = C.base.delta;
  B.alpha = C.alpha;
  B.beta = C.beta;
  B.psi = C.base.psi;
  B.omega = C.base.omega;
  B.counit = C.base.counit;
  out.validation = check_inf_bialgebra(B, opt);
  {
    Checker<K> ck(out.validation, opt);
    auto sig = [&](const Vec<K>& u, const Vec<K>& v) {
      K s(0);
      for (int i = 0; i < d; ++i) {
        if (u[i] == K(0)) continue;
        for (int j = 0; j < d; ++j) s += u[i] * C.sigma(i, j) * v[j];
      }
      return s;
    };
    Mat<K> m1 = C.alpha.transpose() * C.sigma * (C.beta * C.base.omega);
    Mat<K> m2b = C.sigma * C.base.psi;
    Mat<K> m3 = C.base.omega.transpose() * C.sigma;
    Mat<K> m6 = (C.alpha * C.base.psi).transpose() * C.sigma * C.beta;
    Mat<K> m7 = C.alpha.transpose() * C.sigma * C.beta;
    const int n3 = d * d * d;
    Vec<K> lhs6(n3, K(0)), rhs6(n3, K(0)), lhs7(n3, K(0)), rhs7(n3, K(0));
    for (int c = 0; c < d; ++c)
      for (int dd = 0; dd < d; ++dd)
        for (int ee = 0; ee < d; ++ee) {
          int ix = (c * d + dd) * d + ee;
          Vec<K> cd = mu.col(c * d + dd);
          Vec<K> de_ = mu.col(dd * d + ee);
          K s_cd_be = sig(cd, C.beta.apply(basis_vec<K>(d, ee)));
          K s_al_de = sig(C.alpha.apply(basis_vec<K>(d, c)), de_);
          K t3(0), t1(0);
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
              if (!(D[ee](p, q) == K(0))) t3 += D[ee](p, q) * m3(dd, p) * m6(c, q);
              if (!(D[c](p, q) == K(0))) t1 += D[c](p, q) * m1(p, ee) * m2b(q, dd);
            }
          if (C.kind == QtKind::quasi) {
            lhs6[ix] = s_cd_be;
            rhs6[ix] = -t3;
            lhs7[ix] = s_al_de;
            rhs7[ix] = t1 - C.lambda * m7(c, ee) * eps[dd] -
                       C.lambda * sig(basis_vec<K>(d, c), basis_vec<K>(d, dd)) * eps[ee];
          } else {
            lhs6[ix] = s_cd_be;
            rhs6[ix] = -t3 - C.lambda * m7(c, ee) * eps[dd] -
                       C.lambda * sig(basis_vec<K>(d, dd), basis_vec<K>(d, ee)) * eps[c];
            lhs7[ix] = s_al_de;
            rhs7[ix] = t1;
          }
        }
    if (C.kind == QtKind::quasi) {
      ck.equal_vec("eq-01.06", lhs6, rhs6);
      ck.equal_vec("eq-01.07", lhs7, rhs7);
    } else {
      ck.equal_vec("eq-01.10", lhs6, rhs6);
      ck.equal_vec("eq-01.11", lhs7, rhs7);
    }
  }
  out.value = std::move(B);
  return out;
}

namespace detail {

template <class K>
void require_equal_coalgebra(const BiHomCoalgebra<K>& a, const BiHomCoalgebra<K>& b,
                             const char* what) {
  bool same = a.dim == b.dim && a.delta == b.delta && a.psi == b.psi &&
              a.omega == b.omega && a.counit == b.counit;
  if (!same)
    throw ShapeError(std::string(what) + ": structures are over different coalgebras");
}

template <class K>
void require_comodule_maps(const BicomoduleData<K>& M, const char* what) {
  if (!M.alphaM || !M.betaM)
    throw ShapeError(std::string(what) + ": comodule needs alphaM and betaM");
}

}  // namespace detail

template <class K>
ViolationReport<K> check_left_comodule_only(const BicomoduleData<K>& M,
                                            CheckOptions opt = {}) {
  if (!M.rho) throw ShapeError("left comodule: rho missing");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  ck.commute("eq-commute-psiM-omegaM", M.psiM, M.omegaM);
  detail::left_comodule_axioms(ck, M.coalgebra, *M.rho, M.psiM, M.omegaM);
  return rep;
}

template <class K>
ViolationReport<K> check_right_comodule_only(const BicomoduleData<K>& M,
                                             CheckOptions opt = {}) {
  if (!M.phi) throw ShapeError("right comodule: phi missing");
  ViolationReport<K> rep;
  Checker<K> ck(rep, opt);
  ck.commute("eq-commute-psiM-omegaM", M.psiM, M.omegaM);
  detail::right_comodule_axioms(ck, M.coalgebra, *M.phi, M.psiM, M.omegaM);
  return rep;
}

/// Induced left action over the mu_sigma bialgebra; the anti kind adds the
/// extra weight term.
template <class K>
BuildResult<K, LeftHopfModule<K>> coqt_left_action(const CoqtStructure<K>& C,
                                                   const BicomoduleData<K>& M,
                                                   CheckOptions opt = {}) {
  detail::require_equal_coalgebra(M.coalgebra, C.base, "coqt-left-action");
  if (!M.rho) throw ShapeError("coqt-left-action: comodule needs rho");
  detail::require_comodule_maps(M, "coqt-left-action");
  BuildResult<K, LeftHopfModule<K>> out;
  auto br = mu_sigma(C, opt);
  out.preconditions = br.preconditions;
  {
    Checker<K> ck(out.preconditions, opt);
    Mat<K> Rho = M.rho->as_coproduct_map();
    ck.commute("pre-commute-betaM-psiM", *M.betaM, M.psiM);
    ck.equal("pre-betaM-coaction", Rho * (*M.betaM), kron(C.beta, *M.betaM) * Rho,
             {M.mdim});
  }
  out.preconditions.merge(check_left_comodule_only(M, opt));
  if (!out.preconditions.passed() || !br.value) return out;

  const int d = C.base.dim, dM = M.mdim;
  Mat<K> be_psii = (*M.betaM) * invert(M.psiM);
  Mat<K> m8 = C.base.omega.transpose() * C.sigma;  // sigma(omega(c), p)
  const Vec<K>& eps = *C.base.counit;
  Mat<K> gamma(dM, d * dM);
  for (int c = 0; c < d; ++c)
    for (int m = 0; m < dM; ++m) {
      Vec<K> col(dM, K(0));
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < dM; ++q) {
          const K& rpq = (*M.rho)(m, p, q);
          if (rpq == K(0)) continue;
          col = col - (rpq * m8(c, p)) * be_psii.apply(basis_vec<K>(dM, q));
        }
      if (C.kind == QtKind::anti)
        col = col - (C.lambda * eps[c]) * M.betaM->apply(basis_vec<K>(dM, m));
      for (int k = 0; k < dM; ++k) gamma(k, c * dM + m) = col[k];
    }

  LeftHopfModule<K> H{*br.value, dM, Tensor3<K>::from_product_map(gamma, d, dM), *M.rho,
                      *M.alphaM, *M.betaM, M.psiM, M.omegaM};
  out.validation = br.validation;
  out.validation.merge(check_left_hopf_module(H, opt));
  out.value = std::move(H);
  return out;
}

/// Induced right action over the mu_sigma bialgebra; the weight term
/// belongs to the quasi kind.
template <class K>
BuildResult<K, RightHopfModule<K>> coqt_right_action(const CoqtStructure<K>& C,
                                                     const BicomoduleData<K>& M,
                                                     CheckOptions opt = {}) {
  detail::require_equal_coalgebra(M.coalgebra, C.base, "coqt-right-action");
  if (!M.phi) throw ShapeError("coqt-right-action: comodule needs phi");
  detail::require_comodule_maps(M, "coqt-right-action");
  BuildResult<K, RightHopfModule<K>> out;
  auto br = mu_sigma(C, opt);
  out.preconditions = br.preconditions;
  {
    Checker<K> ck(out.preconditions, opt);
    Mat<K> Phi = M.phi->as_coproduct_map();
    ck.commute("pre-commute-alphaM-omegaM", *M.alphaM, M.omegaM);
    ck.equal("pre-alphaM-coaction", Phi * (*M.alphaM), kron(*M.alphaM, C.alpha) * Phi,
             {M.mdim});
  }
  out.preconditions.merge(check_right_comodule_only(M, opt));
  if (!out.preconditions.passed() || !br.value) return out;

  const int d = C.base.dim, dM = M.mdim;
  Mat<K> al_omi = (*M.alphaM) * invert(M.omegaM);
  Mat<K> m2 = C.sigma * C.base.psi;  // sigma(p, psi(c))
  const Vec<K>& eps = *C.base.counit;
  Mat<K> nu(dM, dM * d);
  for (int m = 0; m < dM; ++m)
    for (int c = 0; c < d; ++c) {
      Vec<K> col(dM, K(0));
      for (int q = 0; q < dM; ++q)
        for (int p = 0; p < d; ++p) {
          const K& ppq = (*M.phi)(m, q, p);
          if (ppq == K(0)) continue;
          col = col + (ppq * m2(p, c)) * al_omi.apply(basis_vec<K>(dM, q));
        }
      if (C.kind == QtKind::quasi)
        col = col - (C.lambda * eps[c]) * M.alphaM->apply(basis_vec<K>(dM, m));
      for (int k = 0; k < dM; ++k) nu(k, m * d + c) = col[k];
    }

  RightHopfModule<K> H{*br.value, dM, Tensor3<K>::from_product_map(nu, dM, d), *M.phi,
                       *M.alphaM, *M.betaM, M.psiM, M.omegaM};
  out.validation = br.validation;
  out.validation.merge(check_right_hopf_module(H, opt));
  out.value = std::move(H);
  return out;
}

/// Both induced actions together turn a bicomodule into a Hopf bimodule.
template <class K>
BuildResult<K, HopfBimodule<K>> coqt_hopf_bimodule(const CoqtStructure<K>& C,
                                                   const BicomoduleData<K>& M,
                                                   CheckOptions opt = {}) {
  detail::require_equal_coalgebra(M.coalgebra, C.base, "coqt-hopf-bimodule");
  if (!M.rho || !M.phi)
    throw ShapeError("coqt-hopf-bimodule: comodule needs both coactions");
  detail::require_comodule_maps(M, "coqt-hopf-bimodule");
  BuildResult<K, HopfBimodule<K>> out;
  auto la = coqt_left_action(C, M, opt);
  auto ra = coqt_right_action(C, M, opt);
  out.preconditions = la.preconditions;
  out.preconditions.merge(ra.preconditions);
  out.preconditions.merge(check_bicomodule(M, opt));
  if (!la.value || !ra.value || !out.preconditions.passed()) return out;

  HopfBimodule<K> H;
  H.bialgebra = la.value->bialgebra;
  H.mdim = M.mdim;
  H.left = la.value->left;
  H.right = ra.value->right;
  H.rho = *M.rho;
  H.phi = *M.phi;
  H.alphaM = *M.alphaM;
  H.betaM = *M.betaM;
  H.psiM = M.psiM;
  H.omegaM = M.omegaM;
  out.validation = check_inf_bialgebra(H.bialgebra, opt);
  out.validation.merge(check_hopf_bimodule(H, opt));
  out.value = std::move(H);
  return out;
}

/// Dualize a quasitriangular candidate: the dual coalgebra carries
/// delta = mu^T, psi_C = beta^T, omega_C = alpha^T, counit = unit^T, the
/// extra maps swap to alpha_C = omega^T, beta_C = psi^T, and sigma is the
/// pairing (f,g) -> (f(x)g)(r), i.e. the same matrix as r.
template <class K>
CoqtStructure<K> dual_of_qt(const QtStructure<K>& Q) {
  if (!Q.base.unit) throw ShapeError("dual_of_qt: base must be unital");
  const int d = Q.base.dim;
  CoqtStructure<K> C;
  C.base.dim = d;
  C.base.delta = Tensor3<K>::from_coproduct_map(
      Q.base.mu.as_product_map().transpose(), d, d);
  C.base.psi = Q.base.beta.transpose();
  C.base.omega = Q.base.alpha.transpose();
  C.base.counit = *Q.base.unit;
  C.alpha = Q.omega.transpose();
  C.beta = Q.psi.transpose();
  C.sigma = Q.r;
  C.lambda = Q.lambda;
  C.kind = Q.kind;
  return C;
}

}  // namespace bihom
