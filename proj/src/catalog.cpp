#include "catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace bihom {

BiHomAlgebra<R> make_kx(int n) {
  BiHomAlgebra<R> A;
  A.dim = n;
  A.mu = Tensor3<R>(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) A.mu(i + j, i, j) = R(1);
  A.alpha = Mat<R>::identity(n);
  A.beta = Mat<R>::identity(n);
  A.unit = basis_vec<R>(n, 0);
  return A;
}

BiHomCoalgebra<R> make_dual_kx(int n) {
  BiHomCoalgebra<R> C;
  C.dim = n;
  C.delta = Tensor3<R>(n, n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= k; ++i) C.delta(k, i, k - i) = R(1);
  C.psi = Mat<R>::identity(n);
  C.omega = Mat<R>::identity(n);
  C.counit = basis_vec<R>(n, 0);
  return C;
}

InfBialgebra<R> make_canonical(int n, const R& lambda, bool left) {
  BiHomAlgebra<R> A = make_kx(n);
  InfBialgebra<R> B;
  B.dim = n;
  B.lambda = lambda;
  B.mu = A.mu;
  B.delta = Tensor3<R>(n, n, n);
  for (int k = 0; k < n; ++k) {
    if (left)
      B.delta(k, k, 0) = -lambda;
    else
      B.delta(k, 0, k) = -lambda;
  }
  B.alpha = Mat<R>::identity(n);
  B.beta = Mat<R>::identity(n);
  B.psi = Mat<R>::identity(n);
  B.omega = Mat<R>::identity(n);
  B.unit = A.unit;
  return B;
}

Mat<R> make_ddx(int n) {
  Mat<R> D(n, n);
  for (int k = 1; k < n; ++k) D(k - 1, k) = R(k);
  return D;
}

Mat<R> make_euler(int n) {
  Mat<R> D(n, n);
  for (int k = 1; k < n; ++k) D(k, k) = R(k);
  return D;
}

Mat<R> make_scaling(int n, const R& c) {
  Mat<R> m(n, n);
  R p(1);
  for (int k = 0; k < n; ++k) {
    m(k, k) = p;
    p *= c;
  }
  return m;
}

HopfBimodule<R> make_example_29(const InfBialgebra<R>& B) {
  const int d = B.dim, dM = d * d;
  auto idx = [d](int u, int v) { return u * d + v; };
  HopfBimodule<R> H;
  H.bialgebra = B;
  H.mdim = dM;
  H.left = Tensor3<R>(dM, d, dM);
  H.right = Tensor3<R>(dM, dM, d);
  H.rho = Tensor3<R>(dM, d, dM);
  H.phi = Tensor3<R>(dM, dM, d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      for (int i = 0; i < d; ++i)
        for (int w = 0; w < d; ++w) {
          // e_i |> (e_u (x) e_v) = (e_i e_u) (x) beta(e_v)
          if (!(B.mu(w, i, u) == R(0)))
            for (int z = 0; z < d; ++z)
              if (!(B.beta(z, v) == R(0)))
                H.left(idx(w, z), i, idx(u, v)) += B.mu(w, i, u) * B.beta(z, v);
          // (e_u (x) e_v) <| e_i = alpha(e_u) (x) (e_v e_i)
          if (!(B.mu(w, v, i) == R(0)))
            for (int z = 0; z < d; ++z)
              if (!(B.alpha(z, u) == R(0)))
                H.right(idx(z, w), idx(u, v), i) += B.alpha(z, u) * B.mu(w, v, i);
        }
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          // rho = Delta (x) psi : (u,v) -> u1 (x) (u2 (x) psi v)
          if (!(B.delta(u, p, q) == R(0)))
            for (int z = 0; z < d; ++z)
              if (!(B.psi(z, v) == R(0)))
                H.rho(idx(u, v), p, idx(q, z)) += B.delta(u, p, q) * B.psi(z, v);
          // phi = omega (x) Delta : (u,v) -> (omega u (x) v1) (x) v2
          if (!(B.delta(v, p, q) == R(0)))
            for (int z = 0; z < d; ++z)
              if (!(B.omega(z, u) == R(0)))
                H.phi(idx(u, v), idx(z, p), q) += B.omega(z, u) * B.delta(v, p, q);
        }
    }
  H.alphaM = kron(B.alpha, B.alpha);
  H.betaM = kron(B.beta, B.beta);
  H.psiM = kron(B.psi, B.psi);
  H.omegaM = kron(B.omega, B.omega);
  return H;
}

BimoduleData<R> make_regular_bimodule(const BiHomAlgebra<R>& A) {
  BimoduleData<R> M;
  M.algebra = A;
  M.mdim = A.dim;
  M.left = A.mu;
  M.right = A.mu;
  M.muM = A.mu;
  M.alphaM = A.alpha;
  M.betaM = A.beta;
  M.psiM = Mat<R>::identity(A.dim);
  M.omegaM = Mat<R>::identity(A.dim);
  return M;
}

BicomoduleData<R> make_regular_bicomodule(const BiHomCoalgebra<R>& C) {
  BicomoduleData<R> M;
  M.coalgebra = C;
  M.mdim = C.dim;
  M.rho = C.delta;
  M.phi = C.delta;
  M.deltaM = C.delta;
  M.psiM = C.psi;
  M.omegaM = C.omega;
  M.alphaM = Mat<R>::identity(C.dim);
  M.betaM = Mat<R>::identity(C.dim);
  return M;
}

Mat<R> make_r_zero(int n) { return Mat<R>(n, n); }

Mat<R> make_r_unit_unit(int n) {
  Mat<R> r(n, n);
  r(0, 0) = R(1);
  return r;
}

Mat<R> make_r_xx(int n) {
  Mat<R> r(n, n);
  r(1, 1) = R(1);
  return r;
}

namespace {

const std::vector<std::pair<std::string, R>> kLambdas = {
    {"l0", R(0)}, {"l1", R(1)}, {"lm1", R(-1)}, {"l2", R(2)}, {"l3", R(3)}};

QtStructure<R> make_qt(int n, const Mat<R>& r, const R& lambda, QtKind kind) {
  QtStructure<R> Q;
  Q.base = make_kx(n);
  Q.psi = Mat<R>::identity(n);
  Q.omega = Mat<R>::identity(n);
  Q.r = r;
  Q.lambda = lambda;
  Q.kind = kind;
  return Q;
}

RotaBaxterData<R> make_rb(const BiHomAlgebra<R>& A, const Mat<R>& RA, const R& lambda) {
  RotaBaxterData<R> rb;
  rb.algebra = A;
  rb.lambda = lambda;
  rb.RA = RA;
  rb.module = RotaBaxterModule<R>{A.dim, A.mu, A.mu, A.alpha, A.beta, RA};
  return rb;
}

DerivationData<R> make_gd(const BiHomAlgebra<R>& A, const Mat<R>& D, const Mat<R>& xi,
                          const R& lambda, const R& kappa) {
  DerivationData<R> g;
  g.algebra = A;
  g.lambda = lambda;
  g.D = D;
  g.xi = xi;
  g.kappa = kappa;
  return g;
}

/// The biproduct showcase: over the canonical left bialgebra (lambda = 1) on
/// K[x]/(x^2), take M = A with the regular actions, rho = 0, phi = Delta and
/// zero muM / deltaM; Eq yd then reduces to an exact cancellation.
Record make_qt_biproduct_dim2() {
  InfBialgebra<R> B = make_canonical(2, R(1), true);
  HopfBimodule<R> H;
  H.bialgebra = B;
  H.mdim = 2;
  H.left = B.mu;
  H.right = B.mu;
  H.rho = Tensor3<R>(2, 2, 2);
  H.phi = B.delta;
  H.alphaM = Mat<R>::identity(2);
  H.betaM = Mat<R>::identity(2);
  H.psiM = Mat<R>::identity(2);
  H.omegaM = Mat<R>::identity(2);
  H.muM = Tensor3<R>(2, 2, 2);
  H.deltaM = Tensor3<R>(2, 2, 2);
  return Record{"hopf-bimodule", std::move(H)};
}

using Builder = std::function<Record()>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> b = [] {
    std::map<std::string, Builder> m;
    for (int n : {2, 3, 4}) {
      std::string sn = std::to_string(n);
      m["kx" + sn] = [n] { return Record{"algebra", make_kx(n)}; };
      m["dualkx" + sn] = [n] { return Record{"coalgebra", make_dual_kx(n)}; };
      m["regular-bimodule-kx" + sn] = [n] {
        return Record{"module", make_regular_bimodule(make_kx(n))};
      };
      m["regular-bicomodule-dualkx" + sn] = [n] {
        return Record{"comodule", make_regular_bicomodule(make_dual_kx(n))};
      };
      for (const auto& [ln, lv] : kLambdas) {
        R lam = lv;
        m["canonical-left-" + ln + "-kx" + sn] = [n, lam] {
          return Record{"bialgebra", make_canonical(n, lam, true)};
        };
        m["canonical-right-" + ln + "-kx" + sn] = [n, lam] {
          return Record{"bialgebra", make_canonical(n, lam, false)};
        };
      }
    }
    for (const auto& [ln, lv] : kLambdas) {
      R lam = lv;
      m["ex29-" + ln + "-kx2"] = [lam] {
        return Record{"hopf-bimodule", make_example_29(make_canonical(2, lam, true))};
      };
      m["ex29-" + ln + "-kx3"] = [lam] {
        return Record{"hopf-bimodule", make_example_29(make_canonical(3, lam, true))};
      };
      m["qt-r0-" + ln + "-kx2"] = [lam] {
        return Record{"qt", make_qt(2, make_r_zero(2), lam, QtKind::quasi)};
      };
      m["qt-anti-r0-" + ln + "-kx2"] = [lam] {
        return Record{"qt", make_qt(2, make_r_zero(2), lam, QtKind::anti)};
      };
    }
    m["qt-r11-l1-kx2"] = [] {
      return Record{"qt", make_qt(2, make_r_unit_unit(2), R(1), QtKind::quasi)};
    };
    m["qt-rxx-l0-kx2"] = [] {
      return Record{"qt", make_qt(2, make_r_xx(2), R(0), QtKind::quasi)};
    };
    m["qt-anti-r11-lm1-kx2"] = [] {
      return Record{"qt", make_qt(2, make_r_unit_unit(2), R(-1), QtKind::anti)};
    };
    m["qt-anti-rxx-l0-kx2"] = [] {
      return Record{"qt", make_qt(2, make_r_xx(2), R(0), QtKind::anti)};
    };
    m["coqt-s0-l1-dualkx2"] = [] {
      return Record{"coqt", dual_of_qt(make_qt(2, make_r_zero(2), R(1), QtKind::quasi))};
    };
    m["coqt-s11-l1-dualkx2"] = [] {
      return Record{"coqt",
                    dual_of_qt(make_qt(2, make_r_unit_unit(2), R(1), QtKind::quasi))};
    };
    m["coqt-sxx-l0-dualkx2"] = [] {
      return Record{"coqt", dual_of_qt(make_qt(2, make_r_xx(2), R(0), QtKind::quasi))};
    };
    m["coqt-anti-s11-lm1-dualkx2"] = [] {
      return Record{"coqt",
                    dual_of_qt(make_qt(2, make_r_unit_unit(2), R(-1), QtKind::anti))};
    };
    m["qt-biproduct-dim2"] = [] { return make_qt_biproduct_dim2(); };
    m["rb-zero-l0-kx2"] = [] {
      return Record{"rota-baxter", make_rb(make_kx(2), Mat<R>(2, 2), R(0))};
    };
    m["rb-zero-l2-kx2"] = [] {
      return Record{"rota-baxter", make_rb(make_kx(2), Mat<R>(2, 2), R(2))};
    };
    m["rb-id-lm1-kx2"] = [] {
      return Record{"rota-baxter", make_rb(make_kx(2), Mat<R>::identity(2), R(-1))};
    };
    m["rb-id-lm1-kx3"] = [] {
      return Record{"rota-baxter", make_rb(make_kx(3), Mat<R>::identity(3), R(-1))};
    };
    // Euler operator x d/dx: unlike d/dx itself it descends to K[x]/(x^n)
    // as a genuine derivation (D(x^n) = n x^n stays in the ideal).
    for (int n : {2, 3, 4}) {
      std::string sn = std::to_string(n);
      m["euler-kx" + sn] = [n] {
        return Record{"gd-data", make_gd(make_kx(n), make_euler(n),
                                         Mat<R>::identity(n), R(0), R(0))};
      };
    }
    m["x2ddx-kx4"] = [] {  // x^2 d/dx, another derivation of the truncated ring
      Mat<R> D(4, 4);
      for (int k = 1; k < 3; ++k) D(k + 1, k) = R(k);
      return Record{"gd-data", make_gd(make_kx(4), D, Mat<R>::identity(4), R(0), R(0))};
    };
    // Gelfand-Dorfman corollary presets: parameter bindings of gd-approach2.
    m["gd-cor-3.8"] = [] {  // xi = alpha beta (identity maps here)
      return Record{"gd-data",
                    make_gd(make_kx(3), make_euler(3), Mat<R>::identity(3), R(0), R(0))};
    };
    m["gd-cor-3.9"] = [] {  // xi = id, kappa = 1
      return Record{"gd-data",
                    make_gd(make_kx(3), make_euler(3), Mat<R>::identity(3), R(0), R(1))};
    };
    m["gd-cor-3.10"] = [] {  // D = mu Delta of a BiHom-commutative bialgebra
      InfBialgebra<R> B = make_canonical(2, R(2), true);
      Mat<R> D = B.mu.as_product_map() * B.delta.as_coproduct_map();
      return Record{"gd-data",
                    make_gd(B.algebra(), D, Mat<R>::identity(2), R(2), R(1))};
    };
    m["gd-cor-3.11"] = [] {  // alpha = beta = id, nontrivial xi
      Mat<R> xi = make_scaling(2, R(2));
      Mat<R> D(2, 2);
      D(0, 0) = R(-1);  // D(1) = -lambda 1 with lambda = 1
      D(1, 1) = R(1);   // D(x) = x
      return Record{"gd-data", make_gd(make_kx(2), D, xi, R(1), R(1))};
    };
    m["gd-cor-3.12"] = [] {  // D = mu Delta_r of a quasitriangular structure
      auto br = delta_r(make_qt(2, make_r_unit_unit(2), R(1), QtKind::quasi));
      const InfBialgebra<R>& B = *br.value;
      Mat<R> D = B.mu.as_product_map() * B.delta.as_coproduct_map();
      return Record{"gd-data",
                    make_gd(B.algebra(), D, Mat<R>::identity(2), R(1), R(0))};
    };
    m["twist-kx2-s2"] = [] {
      return Record{"twist-data",
                    TwistData<R>{make_kx(2), make_scaling(2, R(2)), Mat<R>::identity(2)}};
    };
    m["twist-kx3-s23"] = [] {
      return Record{"twist-data",
                    TwistData<R>{make_kx(3), make_scaling(3, R(2)), make_scaling(3, R(3))}};
    };
    m["hopf-twist-ex29-l1"] = [] {
      HopfBimodule<R> H = make_example_29(make_canonical(2, R(1), true));
      Mat<R> a = make_scaling(2, R(2)), b = make_scaling(2, R(3)),
             p = make_scaling(2, R(5)), o = make_scaling(2, R(7));
      return Record{"hopf-twist-data",
                    HopfTwistData<R>{std::move(H), a, b, p, o, kron(a, a), kron(b, b),
                                     kron(p, p), kron(o, o)}};
    };
    return m;
  }();
  return b;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : builders()) names.push_back(k);
  return names;  // std::map keeps them sorted
}

Record catalog_get(const std::string& name) {
  auto it = builders().find(name);
  if (it == builders().end()) {
    std::ostringstream os;
    os << "unknown preset '" << name << "'; available presets:\n";
    for (const auto& n : catalog_names()) os << "  " << n << "\n";
    throw UnknownPresetError(os.str());
  }
  return it->second();
}

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int next(int n) { return int(g() % std::uint64_t(n)); }
  R val() { return R(next(5) - 2); }  // -2..2
};

Tensor3<R> rand_tensor(Rng& rng, int d1, int d2, int d3, int sparsity) {
  Tensor3<R> t(d1, d2, d3);
  int nnz = rng.next(sparsity + 1);
  for (int s = 0; s < nnz; ++s) t(rng.next(d1), rng.next(d2), rng.next(d3)) = rng.val();
  return t;
}

Mat<R> rand_map(Rng& rng, int d, int sparsity) {
  int shape = rng.next(3);
  if (shape == 0) return Mat<R>::identity(d);
  if (shape == 1) {
    Mat<R> m(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = rng.val();
    return m;
  }
  Mat<R> m(d, d);
  int nnz = 1 + rng.next(sparsity);
  for (int s = 0; s < nnz; ++s) m(rng.next(d), rng.next(d)) = rng.val();
  return m;
}

/// A pair of commuting maps: beta is a polynomial in alpha.
std::pair<Mat<R>, Mat<R>> rand_commuting_pair(Rng& rng, int d, int sparsity) {
  Mat<R> a = rand_map(rng, d, sparsity);
  Mat<R> b = rng.val() * Mat<R>::identity(d) + rng.val() * a;
  return {a, b};
}

}  // namespace

std::vector<std::string> random_kinds() {
  return {"algebra",       "coalgebra",          "bialgebra",
          "module",        "comodule",           "hopf-bimodule",
          "rota-baxter",   "dendriform",         "dendriform-bimodule",
          "prelie",        "prelie-bimodule",    "novikov-poisson"};
}

RandomResult random_structure(const std::string& kind, int dim, std::uint64_t seed,
                              int sparsity) {
  if (dim < 1 || dim > 4) throw ShapeError("random_structure: dim must be in 1..4");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(kind));
  const int d = dim;
  Record rec;
  if (kind == "algebra") {
    auto [a, b] = rand_commuting_pair(rng, d, sparsity);
    rec = Record{"algebra",
                 BiHomAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), a, b, {}}};
  } else if (kind == "coalgebra") {
    auto [p, o] = rand_commuting_pair(rng, d, sparsity);
    rec = Record{"coalgebra",
                 BiHomCoalgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), p, o, {}}};
  } else if (kind == "bialgebra") {
    auto [a, b] = rand_commuting_pair(rng, d, sparsity);
    InfBialgebra<R> B;
    B.dim = d;
    B.lambda = rng.val();
    B.mu = rand_tensor(rng, d, d, d, sparsity);
    B.delta = rand_tensor(rng, d, d, d, sparsity);
    B.alpha = a;
    B.beta = b;
    B.psi = rng.val() * Mat<R>::identity(d) + rng.val() * a;
    B.omega = rng.val() * Mat<R>::identity(d) + rng.val() * a;
    rec = Record{"bialgebra", std::move(B)};
  } else if (kind == "module") {
    auto [aA, bA] = rand_commuting_pair(rng, d, sparsity);
    auto [aM, bM] = rand_commuting_pair(rng, d, sparsity);
    BimoduleData<R> M;
    M.algebra = BiHomAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), aA, bA, {}};
    M.mdim = d;
    M.left = rand_tensor(rng, d, d, d, sparsity);
    M.right = rand_tensor(rng, d, d, d, sparsity);
    M.muM = rand_tensor(rng, d, d, d, sparsity);
    M.alphaM = aM;
    M.betaM = bM;
    rec = Record{"module", std::move(M)};
  } else if (kind == "comodule") {
    auto [pC, oC] = rand_commuting_pair(rng, d, sparsity);
    auto [pM, oM] = rand_commuting_pair(rng, d, sparsity);
    BicomoduleData<R> M;
    M.coalgebra = BiHomCoalgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), pC, oC, {}};
    M.mdim = d;
    M.rho = rand_tensor(rng, d, d, d, sparsity);
    M.phi = rand_tensor(rng, d, d, d, sparsity);
    M.deltaM = rand_tensor(rng, d, d, d, sparsity);
    M.psiM = pM;
    M.omegaM = oM;
    rec = Record{"comodule", std::move(M)};
  } else if (kind == "hopf-bimodule") {
    int pick = rng.next(int(kLambdas.size()));
    InfBialgebra<R> B = make_canonical(2, kLambdas[pick].second, true);
    HopfBimodule<R> H;
    H.bialgebra = B;
    H.mdim = d;
    H.left = rand_tensor(rng, d, 2, d, sparsity);
    H.right = rand_tensor(rng, d, d, 2, sparsity);
    H.rho = rand_tensor(rng, d, 2, d, sparsity);
    H.phi = rand_tensor(rng, d, d, 2, sparsity);
    auto [aM, bM] = rand_commuting_pair(rng, d, sparsity);
    H.alphaM = aM;
    H.betaM = bM;
    H.psiM = rng.val() * Mat<R>::identity(d) + rng.val() * aM;
    H.omegaM = rng.val() * Mat<R>::identity(d) + rng.val() * aM;
    rec = Record{"hopf-bimodule", std::move(H)};
  } else if (kind == "rota-baxter") {
    auto [aA, bA] = rand_commuting_pair(rng, d, sparsity);
    RotaBaxterData<R> rb;
    rb.algebra = BiHomAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), aA, bA, {}};
    rb.lambda = rng.val();
    rb.RA = rng.val() * Mat<R>::identity(d) + rng.val() * aA;
    rec = Record{"rota-baxter", std::move(rb)};
  } else if (kind == "dendriform") {
    auto [a, b] = rand_commuting_pair(rng, d, sparsity);
    rec = Record{"dendriform",
                 DendriformAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity),
                                      rand_tensor(rng, d, d, d, sparsity), a, b}};
  } else if (kind == "dendriform-bimodule") {
    auto [aA, bA] = rand_commuting_pair(rng, d, sparsity);
    auto [aM, bM] = rand_commuting_pair(rng, d, sparsity);
    DendriformBimodule<R> D;
    D.algebra = DendriformAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity),
                                     rand_tensor(rng, d, d, d, sparsity), aA, bA};
    D.mdim = d;
    D.succ_am = rand_tensor(rng, d, d, d, sparsity);
    D.prec_am = rand_tensor(rng, d, d, d, sparsity);
    D.succ_ma = rand_tensor(rng, d, d, d, sparsity);
    D.prec_ma = rand_tensor(rng, d, d, d, sparsity);
    D.alphaM = aM;
    D.betaM = bM;
    rec = Record{"dendriform-bimodule", std::move(D)};
  } else if (kind == "prelie") {
    auto [a, b] = rand_commuting_pair(rng, d, sparsity);
    rec = Record{"prelie",
                 PreLieAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), a, b}};
  } else if (kind == "prelie-bimodule") {
    auto [aA, bA] = rand_commuting_pair(rng, d, sparsity);
    auto [aM, bM] = rand_commuting_pair(rng, d, sparsity);
    PreLieBimodule<R> P;
    P.algebra = PreLieAlgebra<R>{d, rand_tensor(rng, d, d, d, sparsity), aA, bA};
    P.mdim = d;
    P.circL = rand_tensor(rng, d, d, d, sparsity);
    P.circR = rand_tensor(rng, d, d, d, sparsity);
    P.alphaM = aM;
    P.betaM = bM;
    rec = Record{"prelie-bimodule", std::move(P)};
  } else if (kind == "novikov-poisson") {
    auto [a, b] = rand_commuting_pair(rng, d, sparsity);
    rec = Record{"novikov-poisson",
                 NovikovPoissonData<R>{d, rand_tensor(rng, d, d, d, sparsity),
                                       rand_tensor(rng, d, d, d, sparsity), a, b}};
  } else {
    std::ostringstream os;
    os << "unknown random kind '" << kind << "'; available kinds:";
    for (const auto& n : random_kinds()) os << " " << n;
    throw UnknownPresetError(os.str());
  }
  bool passed = check_record(rec).passed();
  return {std::move(rec), passed};
}

}  // namespace bihom
