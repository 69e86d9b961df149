#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "gd.hpp"
#include "rmatrix.hpp"

using namespace bihom;

TEST_CASE("mu_delta_derivation: zero delta, canonical, delta_r output") {
  InfBialgebra<R> B0;
  B0.dim = 2;
  B0.lambda = R(0);
  B0.mu = make_kx(2).mu;
  B0.delta = Tensor3<R>(2, 2, 2);
  B0.alpha = B0.beta = B0.psi = B0.omega = Mat<R>::identity(2);
  auto r0 = mu_delta_derivation(B0);
  REQUIRE(r0.ok());
  CHECK(r0.value->D.is_zero());

  // canonical: D(a) = -lambda a . 1 = -lambda a
  for (const R& lam : {R(1), R(2), R(3)}) {
    auto r = mu_delta_derivation(make_canonical(3, lam, true));
    REQUIRE(r.ok());
    CHECK(r.value->D == (R(0) - lam) * Mat<R>::identity(3));
  }

  // D = mu Delta_r for r = 1 (x) 1, lambda = 1 passes check_derivation
  Record qrec = catalog_get("qt-r11-l1-kx2");
  const auto& Q = std::get<QtStructure<R>>(qrec.value);
  auto b = delta_r(Q);
  REQUIRE(b.ok());
  auto rd = mu_delta_derivation(*b.value);
  CHECK(rd.ok());
}

TEST_CASE("mu_delta_derivation passes for every catalog bialgebra") {
  for (const std::string& name : catalog_names()) {
    if (name.rfind("canonical-", 0) != 0) continue;
    Record rec = catalog_get(name);
    const auto& B = std::get<InfBialgebra<R>>(rec.value);
    auto r = mu_delta_derivation(B);
    CHECK(r.ok());
  }
}

TEST_CASE("gd_approach1: zero derivation, euler on kx3, noncommuting zeta") {
  BiHomAlgebra<R> A = make_kx(3);
  Mat<R> id = Mat<R>::identity(3);
  auto r0 = gd_approach1(A, id, id, id, Mat<R>(3, 3), R(0));
  REQUIRE(r0.ok());
  CHECK(r0.value->circ == Tensor3<R>(3, 3, 3));

  // classical Gelfand-Dorfman with the Euler derivation: a * b = a (x b')
  auto r = gd_approach1(A, id, id, id, make_euler(3), R(0));
  REQUIRE(r.ok());
  CHECK(check_prelie(*r.value).passed());
  CHECK(check_novikov(*r.value).passed());

  // zeta that is an algebra map but does not commute with D
  Mat<R> zeta = Mat<R>::identity(3);
  zeta(2, 1) = R(1);  // x -> x + x^2
  auto rb = gd_approach1(A, id, zeta, id, make_euler(3), R(0));
  CHECK_FALSE(rb.value.has_value());
  CHECK_FALSE(rb.preconditions.find("pre-commute-zeta-D")->passed());
}

TEST_CASE("gd_approach2 on the corollary presets and by hand") {
  // kappa = 0, xi = id, euler derivation on kx4
  BiHomAlgebra<R> A4 = make_kx(4);
  auto r = gd_approach2(A4, Mat<R>::identity(4), make_euler(4), R(0), R(0));
  REQUIRE(r.ok());

  // D = euler - lambda id with kappa = 1, lambda = 2 on kx3
  BiHomAlgebra<R> A3 = make_kx(3);
  Mat<R> D = make_euler(3) - R(2) * Mat<R>::identity(3);
  auto r2 = gd_approach2(A3, Mat<R>::identity(3), D, R(2), R(1));
  REQUIRE(r2.ok());

  // xi(x) = x + 1 is not an algebra map: named precondition failure
  Mat<R> xi = Mat<R>::identity(2);
  xi(0, 1) = R(1);
  auto rb = gd_approach2(make_kx(2), xi, Mat<R>(2, 2), R(0), R(0));
  CHECK_FALSE(rb.value.has_value());
  CHECK_FALSE(rb.preconditions.find("eq-deri-xi-map")->passed());

  for (const char* name : {"gd-cor-3.8", "gd-cor-3.9", "gd-cor-3.10", "gd-cor-3.11",
                           "gd-cor-3.12", "euler-kx2", "euler-kx3", "euler-kx4",
                           "x2ddx-kx4"}) {
    Record rec = catalog_get(name);
    const auto& g = std::get<DerivationData<R>>(rec.value);
    auto out = gd_approach2(g.algebra, g.xi, g.D, g.lambda, g.kappa);
    CHECK(out.ok());
  }
}

TEST_CASE("gd approaches agree when zeta = iota = xi = id, kappa = 0, lambda = 0") {
  for (int n : {2, 3, 4}) {
    BiHomAlgebra<R> A = make_kx(n);
    Mat<R> id = Mat<R>::identity(n);
    auto r1 = gd_approach1(A, id, id, id, make_euler(n), R(0));
    auto r2 = gd_approach2(A, id, make_euler(n), R(0), R(0));
    REQUIRE(r1.ok());
    REQUIRE(r2.ok());
    CHECK(r1.value->circ == r2.value->circ);
    CHECK(r1.value->alpha == r2.value->alpha);
    CHECK(r1.value->beta == r2.value->beta);
  }
}

TEST_CASE("novikov_poisson_assemble: trivial, euler, shifted derivation") {
  BiHomAlgebra<R> A = make_kx(3);
  auto r0 = novikov_poisson_assemble(A, Mat<R>(3, 3), R(0), R(0));
  REQUIRE(r0.ok());
  CHECK(r0.value->star == Tensor3<R>(3, 3, 3));

  auto r1 = novikov_poisson_assemble(A, make_euler(3), R(0), R(1));
  REQUIRE(r1.ok());

  Mat<R> D = make_euler(3) - R(2) * Mat<R>::identity(3);
  auto r2 = novikov_poisson_assemble(A, D, R(2), R(0));
  REQUIRE(r2.ok());

  // d/dx is not a derivation of the truncated ring: precondition failure
  auto rb = novikov_poisson_assemble(A, make_ddx(3), R(0), R(0));
  CHECK_FALSE(rb.value.has_value());
  CHECK_FALSE(rb.preconditions.find("eq-deri")->passed());
}

TEST_CASE("derivation shift D -> D - lambda id is a bijection on catalog algebras") {
  const R lambdas[] = {R(0), R(1), R(-1), R(2), R(3)};
  for (int n : {2, 3, 4}) {
    BiHomAlgebra<R> A = make_kx(n);
    Mat<R> id = Mat<R>::identity(n);
    std::vector<Mat<R>> zero_derivations = {Mat<R>(n, n), make_euler(n)};
    if (n == 4) {
      Mat<R> x2d(4, 4);
      for (int k = 1; k < 3; ++k) x2d(k + 1, k) = R(k);
      zero_derivations.push_back(x2d);
    }
    for (const Mat<R>& D0 : zero_derivations) {
      REQUIRE(check_derivation(A, D0, id, id, R(0)).passed());
      for (const R& lam : lambdas) {
        Mat<R> D = D0 - lam * id;
        CHECK(check_derivation(A, D, id, id, lam).passed());
        // and back again
        CHECK(check_derivation(A, D + lam * id, id, id, R(0)).passed());
      }
    }
    // conversely a passing lambda-derivation shifts back to a 0-derivation
    for (const R& lam : lambdas) {
      Mat<R> D = make_euler(n) - lam * id;
      REQUIRE(check_derivation(A, D, id, id, lam).passed());
      CHECK(check_derivation(A, D + lam * id, id, id, R(0)).passed());
    }
  }
}

TEST_CASE("gd outputs satisfy both the pre-Lie and Novikov identities") {
  for (const char* name : {"euler-kx3", "gd-cor-3.9", "gd-cor-3.10", "gd-cor-3.12"}) {
    Record rec = catalog_get(name);
    const auto& g = std::get<DerivationData<R>>(rec.value);
    auto out = gd_approach2(g.algebra, g.xi, g.D, g.lambda, g.kappa);
    REQUIRE(out.ok());
    CHECK(check_prelie(*out.value).passed());
    CHECK(check_novikov(*out.value).passed());
  }
}
