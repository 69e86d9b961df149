#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace bihom {

/// Raised when a construction's verified preconditions fail; carries a
/// human-readable summary (the full report travels separately).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class QtKind { quasi, anti };
enum class DendriformVariant { left, right };

inline std::string to_string(QtKind k) { return k == QtKind::quasi ? "quasi" : "anti"; }

/// (A, mu, alpha, beta), optionally unitary.
template <class K>
struct BiHomAlgebra {
  int dim = 0;
  Tensor3<K> mu;        // mu(k,i,j)
  Mat<K> alpha, beta;   // structure endomorphisms
  std::optional<Vec<K>> unit;
};

/// (C, delta, psi, omega), optionally counitary. The counit is a covector.
template <class K>
struct BiHomCoalgebra {
  int dim = 0;
  Tensor3<K> delta;     // delta(k,i,j)
  Mat<K> psi, omega;
  std::optional<Vec<K>> counit;
};

/// 7-tuple (A, mu, delta, alpha, beta, psi, omega) of weight lambda.
template <class K>
struct InfBialgebra {
  int dim = 0;
  K lambda = K(0);
  Tensor3<K> mu, delta;
  Mat<K> alpha, beta, psi, omega;
  std::optional<Vec<K>> unit, counit;

  BiHomAlgebra<K> algebra() const { return {dim, mu, alpha, beta, unit}; }
  BiHomCoalgebra<K> coalgebra() const { return {dim, delta, psi, omega, counit}; }
};

/// Module-side data over a BiHom-algebra. left / right are the actions
/// |> : A(x)M -> M and <| : M(x)A -> M; either may be absent for one-sided
/// modules. muM upgrades the bimodule to a bimodule algebra, psiM/omegaM are
/// carried for the coaction-inducing constructions.
template <class K>
struct BimoduleData {
  BiHomAlgebra<K> algebra;
  int mdim = 0;
  std::optional<Tensor3<K>> left;   // lft(k,a,m)
  std::optional<Tensor3<K>> right;  // rgt(k,m,a)
  std::optional<Tensor3<K>> muM;    // muM(k,m,n)
  Mat<K> alphaM, betaM;
  std::optional<Mat<K>> psiM, omegaM;
};

/// Comodule-side data over a BiHom-coalgebra, dual to BimoduleData.
template <class K>
struct BicomoduleData {
  BiHomCoalgebra<K> coalgebra;
  int mdim = 0;
  std::optional<Tensor3<K>> rho;     // rho(k,c,m)
  std::optional<Tensor3<K>> phi;     // phi(k,m,c)
  std::optional<Tensor3<K>> deltaM;  // deltaM(k,m,n)
  Mat<K> psiM, omegaM;
  std::optional<Mat<K>> alphaM, betaM;
};

template <class K>
struct LeftHopfModule {
  InfBialgebra<K> bialgebra;
  int mdim = 0;
  Tensor3<K> left, rho;
  Mat<K> alphaM, betaM, psiM, omegaM;
};

template <class K>
struct RightHopfModule {
  InfBialgebra<K> bialgebra;
  int mdim = 0;
  Tensor3<K> right, phi;
  Mat<K> alphaM, betaM, psiM, omegaM;
};

/// Full Hopf bimodule bundle. muM/deltaM are only present when the record is
/// used as biproduct input (module coalgebra / comodule algebra structure).
template <class K>
struct HopfBimodule {
  InfBialgebra<K> bialgebra;
  int mdim = 0;
  Tensor3<K> left, right, rho, phi;
  Mat<K> alphaM, betaM, psiM, omegaM;
  std::optional<Tensor3<K>> muM, deltaM;

  LeftHopfModule<K> left_half() const {
    return {bialgebra, mdim, left, rho, alphaM, betaM, psiM, omegaM};
  }
  RightHopfModule<K> right_half() const {
    return {bialgebra, mdim, right, phi, alphaM, betaM, psiM, omegaM};
  }
};

template <class K>
struct RotaBaxterModule {
  int mdim = 0;
  Tensor3<K> left, right;
  Mat<K> alphaM, betaM, RM;
};

template <class K>
struct RotaBaxterData {
  BiHomAlgebra<K> algebra;
  K lambda = K(0);
  Mat<K> RA;
  std::optional<RotaBaxterModule<K>> module;
};

template <class K>
struct DendriformAlgebra {
  int dim = 0;
  Tensor3<K> prec, succ;  // a < b and a > b, both mu-convention (k,i,j)
  Mat<K> alpha, beta;
};

/// Four actions: a>m, a<m (A on M) and m>a, m<a (M on A, landing in M).
template <class K>
struct DendriformBimodule {
  DendriformAlgebra<K> algebra;
  int mdim = 0;
  Tensor3<K> succ_am, prec_am;  // (k, a, m)
  Tensor3<K> succ_ma, prec_ma;  // (k, m, a)
  Mat<K> alphaM, betaM;
};

template <class K>
struct PreLieAlgebra {
  int dim = 0;
  Tensor3<K> circ;
  Mat<K> alpha, beta;
};

template <class K>
struct PreLieBimodule {
  PreLieAlgebra<K> algebra;
  int mdim = 0;
  Tensor3<K> circL;  // (k, a, m)
  Tensor3<K> circR;  // (k, m, a)
  Mat<K> alphaM, betaM;
};

template <class K>
struct NovikovPoissonData {
  int dim = 0;
  Tensor3<K> dot, star;
  Mat<K> alpha, beta;
};

/// Quasitriangular candidate: unital base with invertible alpha/beta, extra
/// maps psi/omega, r in A(x)A stored as a dim x dim matrix r(i,j).
template <class K>
struct QtStructure {
  BiHomAlgebra<K> base;
  Mat<K> psi, omega;
  Mat<K> r;
  K lambda = K(0);
  QtKind kind = QtKind::quasi;
};

/// Coquasitriangular candidate, dual to QtStructure: counital base with
/// invertible psi/omega, extra maps alpha/beta, sigma(i,j) = sigma(e_i,e_j).
template <class K>
struct CoqtStructure {
  BiHomCoalgebra<K> base;
  Mat<K> alpha, beta;
  Mat<K> sigma;
  K lambda = K(0);
  QtKind kind = QtKind::quasi;
};

/// Derivation bundle for the Gelfand-Dorfman constructions: a commutative
/// base algebra, a candidate lambda-(xi,zeta)-derivation and the scalar knobs.
template <class K>
struct DerivationData {
  BiHomAlgebra<K> algebra;
  K lambda = K(0);
  Mat<K> D;
  Mat<K> xi;
  std::optional<Mat<K>> zeta, iota;
  K kappa = K(0);
};

/// Input bundle for the algebra Yau twist: an (untwisted, associative)
/// algebra plus the two candidate twisting endomorphisms.
template <class K>
struct TwistData {
  BiHomAlgebra<K> algebra;
  Mat<K> alpha, beta;
};

/// Input bundle for the Hopf-bimodule Yau twist: an untwisted Hopf bimodule
/// plus the eight twisting maps.
template <class K>
struct HopfTwistData {
  HopfBimodule<K> hopf;
  Mat<K> alphaA, betaA, psiA, omegaA;
  Mat<K> alphaM, betaM, psiM, omegaM;
};

// ---------------------------------------------------------------------------
// Element-level evaluation helpers (exact linear extensions of the tensors).

template <class K>
Vec<K> eval_mul(const Tensor3<K>& mu, const Vec<K>& x, const Vec<K>& y) {
  if (int(x.size()) != mu.dim2() || int(y.size()) != mu.dim3())
    throw ShapeError("eval_mul: operand shape mismatch");
  Vec<K> r(mu.dim1(), K(0));
  for (int i = 0; i < mu.dim2(); ++i) {
    if (x[i] == K(0)) continue;
    for (int j = 0; j < mu.dim3(); ++j) {
      if (y[j] == K(0)) continue;
      K c = x[i] * y[j];
      for (int k = 0; k < mu.dim1(); ++k) r[k] += c * mu(k, i, j);
    }
  }
  return r;
}

/// Delta(v) as a dim2 x dim3 matrix of tensor-square coordinates.
template <class K>
Mat<K> eval_delta(const Tensor3<K>& delta, const Vec<K>& v) {
  if (int(v.size()) != delta.dim1()) throw ShapeError("eval_delta: shape mismatch");
  Mat<K> r(delta.dim2(), delta.dim3());
  for (int k = 0; k < delta.dim1(); ++k) {
    if (v[k] == K(0)) continue;
    for (int i = 0; i < delta.dim2(); ++i)
      for (int j = 0; j < delta.dim3(); ++j) r(i, j) += v[k] * delta(k, i, j);
  }
  return r;
}

template <class K>
Vec<K> eval_left_act(const Tensor3<K>& lft, const Vec<K>& a, const Vec<K>& m) {
  return eval_mul(lft, a, m);
}

template <class K>
Vec<K> eval_right_act(const Tensor3<K>& rgt, const Vec<K>& m, const Vec<K>& a) {
  return eval_mul(rgt, m, a);
}

template <class K>
Mat<K> eval_coaction(const Tensor3<K>& co, const Vec<K>& m) {
  return eval_delta(co, m);
}

template <class K>
K eval_covector(const Vec<K>& eps, const Vec<K>& v) {
  if (eps.size() != v.size()) throw ShapeError("eval_covector: shape mismatch");
  K r(0);
  for (size_t i = 0; i < v.size(); ++i) r += eps[i] * v[i];
  return r;
}

// ---------------------------------------------------------------------------
// Direct-sum plumbing. Blocks are indexed A-basis first, then M-basis.

template <class K>
Mat<K> direct_sum(const Mat<K>& a, const Mat<K>& m) {
  Mat<K> r(a.rows() + m.rows(), a.cols() + m.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(a.rows() + i, a.cols() + j) = m(i, j);
  return r;
}

}  // namespace bihom
