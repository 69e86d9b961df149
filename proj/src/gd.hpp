#pragma once

#include "constructions.hpp"

namespace bihom {

/// D = mu . Delta is a lambda-(alpha omega, beta psi)-derivation
/// of any lambda-infBH-bialgebra. Returned as a derivation bundle so it can
/// feed the Gelfand-Dorfman constructions directly.
template <class K>
BuildResult<K, DerivationData<K>> mu_delta_derivation(const InfBialgebra<K>& B,
                                                      CheckOptions opt = {}) {
  BuildResult<K, DerivationData<K>> out;
  out.preconditions = check_inf_bialgebra(B, opt);
  if (!out.preconditions.passed()) return out;
  DerivationData<K> dd;
  dd.algebra = B.algebra();
  dd.lambda = B.lambda;
  dd.D = B.mu.as_product_map() * B.delta.as_coproduct_map();
  dd.xi = B.alpha * B.omega;
  dd.zeta = B.beta * B.psi;
  out.validation = check_derivation(dd.algebra, dd.D, dd.xi, *dd.zeta, dd.lambda, opt);
  out.value = std::move(dd);
  return out;
}

namespace detail {

template <class K>
void commute_family(Checker<K>& ck, const std::vector<std::pair<const char*, const Mat<K>*>>& fam) {
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      ck.commute(std::string("pre-commute-") + fam[i].first + "-" + fam[j].first,
                 *fam[i].second, *fam[j].second);
}

}  // namespace detail

/// First Gelfand-Dorfman form: a * b = zeta(a) iota(D(b)) on a commutative
/// BiHom-algebra
/// gives a BiHom-pre-Lie and BiHom-Novikov algebra (A, *, zeta alpha,
/// iota beta xi).
template <class K>
BuildResult<K, PreLieAlgebra<K>> gd_approach1(const BiHomAlgebra<K>& A, const Mat<K>& xi,
                                              const Mat<K>& zeta, const Mat<K>& iota,
                                              const Mat<K>& D, const K& lambda,
                                              CheckOptions opt = {}) {
  BuildResult<K, PreLieAlgebra<K>> out;
  out.preconditions = check_bihom_algebra(A, opt);
  out.preconditions.merge(check_commutative(A, opt));
  out.preconditions.merge(check_derivation(A, D, xi, xi, lambda, opt));
  {
    Checker<K> ck(out.preconditions, opt);
    const int d = A.dim;
    Mat<K> mu = A.mu.as_product_map();
    ck.equal("pre-zeta-map", zeta * mu, mu * kron(zeta, zeta), {d, d});
    ck.equal("pre-iota-map", iota * mu, mu * kron(iota, iota), {d, d});
    detail::commute_family<K>(ck, {{"alpha", &A.alpha},
                                   {"beta", &A.beta},
                                   {"xi", &xi},
                                   {"zeta", &zeta},
                                   {"iota", &iota},
                                   {"D", &D}});
  }
  if (!out.preconditions.passed()) return out;

  PreLieAlgebra<K> P;
  P.dim = A.dim;
  P.circ = Tensor3<K>::from_product_map(A.mu.as_product_map() * kron(zeta, iota * D),
                                        A.dim, A.dim);
  P.alpha = zeta * A.alpha;
  P.beta = iota * A.beta * xi;
  out.validation = check_prelie(P, opt);
  out.validation.merge(check_novikov(P, opt));
  out.value = std::move(P);
  return out;
}

/// Second Gelfand-Dorfman form: a * b = xi(a) D(b) + kappa xi(a) xi(b)
/// gives (A, *, alpha xi, beta xi). The gd-cor-* catalog presets are
/// parameter bindings of this one operation.
template <class K>
BuildResult<K, PreLieAlgebra<K>> gd_approach2(const BiHomAlgebra<K>& A, const Mat<K>& xi,
                                              const Mat<K>& D, const K& lambda,
                                              const K& kappa, CheckOptions opt = {}) {
  BuildResult<K, PreLieAlgebra<K>> out;
  out.preconditions = check_bihom_algebra(A, opt);
  out.preconditions.merge(check_commutative(A, opt));
  out.preconditions.merge(check_derivation(A, D, xi, xi, lambda, opt));
  {
    Checker<K> ck(out.preconditions, opt);
    detail::commute_family<K>(
        ck, {{"alpha", &A.alpha}, {"beta", &A.beta}, {"xi", &xi}, {"D", &D}});
  }
  if (!out.preconditions.passed()) return out;

  Mat<K> mu = A.mu.as_product_map();
  PreLieAlgebra<K> P;
  P.dim = A.dim;
  P.circ = Tensor3<K>::from_product_map(mu * kron(xi, D) + kappa * (mu * kron(xi, xi)),
                                        A.dim, A.dim);
  P.alpha = A.alpha * xi;
  P.beta = A.beta * xi;
  out.validation = check_prelie(P, opt);
  out.validation.merge(check_novikov(P, opt));
  out.value = std::move(P);
  return out;
}

/// dot = mu together with star = a D(b) + kappa ab assembles a
/// BiHom-Novikov-Poisson algebra when D is a lambda-(id,id)-derivation
/// commuting with alpha and beta.
template <class K>
BuildResult<K, NovikovPoissonData<K>> novikov_poisson_assemble(const BiHomAlgebra<K>& A,
                                                               const Mat<K>& D,
                                                               const K& lambda,
                                                               const K& kappa,
                                                               CheckOptions opt = {}) {
  BuildResult<K, NovikovPoissonData<K>> out;
  Mat<K> id = Mat<K>::identity(A.dim);
  out.preconditions = check_bihom_algebra(A, opt);
  out.preconditions.merge(check_commutative(A, opt));
  out.preconditions.merge(check_derivation(A, D, id, id, lambda, opt));
  {
    Checker<K> ck(out.preconditions, opt);
    ck.commute("pre-commute-alpha-D", A.alpha, D);
    ck.commute("pre-commute-beta-D", A.beta, D);
  }
  if (!out.preconditions.passed()) return out;

  Mat<K> mu = A.mu.as_product_map();
  NovikovPoissonData<K> N;
  N.dim = A.dim;
  N.dot = A.mu;
  N.star = Tensor3<K>::from_product_map(mu * kron(id, D) + kappa * mu, A.dim, A.dim);
  N.alpha = A.alpha;
  N.beta = A.beta;
  out.validation = check_novikov_poisson(N, opt);
  out.value = std::move(N);
  return out;
}

}  // namespace bihom
