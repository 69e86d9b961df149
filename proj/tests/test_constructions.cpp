#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "constructions.hpp"

using namespace bihom;

TEST_CASE("yau_twist_algebra: identity, scaling, non-map") {
  BiHomAlgebra<R> A = make_kx(2);
  auto r1 = yau_twist_algebra(A, Mat<R>::identity(2), Mat<R>::identity(2));
  REQUIRE(r1.ok());
  CHECK(r1.value->mu == A.mu);

  Mat<R> al = make_scaling(2, R(2));
  auto r2 = yau_twist_algebra(A, al, Mat<R>::identity(2));
  REQUIRE(r2.ok());
  // 1*x = x, x*1 = 2x, x*x = 0
  CHECK(r2.value->mu(1, 0, 1) == R(1));
  CHECK(r2.value->mu(1, 1, 0) == R(2));
  CHECK(eval_mul(r2.value->mu, basis_vec<R>(2, 1), basis_vec<R>(2, 1)) ==
        Vec<R>{R(0), R(0)});

  // alpha(x) = x + 1 is not an algebra endomorphism of K[x]/(x^2)
  Mat<R> bad = Mat<R>::identity(2);
  bad(0, 1) = R(1);
  auto r3 = yau_twist_algebra(A, bad, Mat<R>::identity(2));
  CHECK_FALSE(r3.value.has_value());
  CHECK_FALSE(r3.preconditions.passed());
  CHECK_FALSE(r3.preconditions.find("pre-alpha-mult")->passed());
}

TEST_CASE("yau_twist_hopf_bimodule: identity twist is the identity") {
  HopfBimodule<R> H = make_example_29(make_canonical(2, R(1), true));
  Mat<R> i2 = Mat<R>::identity(2), i4 = Mat<R>::identity(4);
  auto r = yau_twist_hopf_bimodule(H, i2, i2, i2, i2, i4, i4, i4, i4);
  REQUIRE(r.ok());
  CHECK(r.value->left == H.left);
  CHECK(r.value->right == H.right);
  CHECK(r.value->rho == H.rho);
  CHECK(r.value->phi == H.phi);
  CHECK(r.value->bialgebra.mu == H.bialgebra.mu);
  CHECK(r.value->bialgebra.delta == H.bialgebra.delta);
}

TEST_CASE("yau_twist_hopf_bimodule: scaling twist revalidates; bad maps refused") {
  HopfBimodule<R> H = make_example_29(make_canonical(2, R(1), true));
  Mat<R> a = make_scaling(2, R(2)), b = make_scaling(2, R(3)), p = make_scaling(2, R(5)),
         o = make_scaling(2, R(7));
  auto r = yau_twist_hopf_bimodule(H, a, b, p, o, kron(a, a), kron(b, b), kron(p, p),
                                   kron(o, o));
  CHECK(r.ok());

  // non-commuting alphaM / betaM fail the stated precondition
  Mat<R> nc = Mat<R>::identity(4);
  nc(0, 1) = R(1);
  Mat<R> dg = Mat<R>::identity(4);
  dg(1, 1) = R(2);
  auto r2 = yau_twist_hopf_bimodule(H, a, b, p, o, nc, dg, kron(p, p), kron(o, o));
  CHECK_FALSE(r2.value.has_value());
  CHECK_FALSE(r2.preconditions.find("pre-commute-M-alpha-beta")->passed());
}

TEST_CASE("infbh_product: zero-dimensional M returns A itself") {
  BimoduleData<R> M;
  M.algebra = make_kx(2);
  M.mdim = 0;
  M.left = Tensor3<R>(0, 2, 0);
  M.right = Tensor3<R>(0, 0, 2);
  M.muM = Tensor3<R>(0, 0, 0);
  M.alphaM = Mat<R>(0, 0);
  M.betaM = Mat<R>(0, 0);
  auto r = infbh_product(M);
  REQUIRE(r.ok());
  CHECK(r.value->dim == 2);
  CHECK(r.value->mu == M.algebra.mu);
}

TEST_CASE("infbh_product: regular bimodule passes, broken muM fails both ways") {
  BimoduleData<R> M = make_regular_bimodule(make_kx(3));
  auto r = infbh_product(M);
  REQUIRE(r.ok());
  CHECK(r.value->dim == 6);

  // corrupt muM so it is no longer compatible with the actions
  BimoduleData<R> bad = M;
  (*bad.muM)(0, 1, 1) = R(1);
  auto r2 = infbh_product(bad);
  CHECK_FALSE(r2.value.has_value());
  CHECK_FALSE(r2.preconditions.passed());
  // iff direction: the raw assembled sum fails eq-1.3 as well
  BiHomAlgebra<R> sum = assemble_product(bad);
  ViolationReport<R> sum_rep = check_bihom_algebra(sum);
  CHECK_FALSE(sum_rep.passed());
  CHECK_FALSE(sum_rep.find("eq-1.3")->passed());
}

TEST_CASE("split_product inverts assemble_product and rejects non-block shapes") {
  BimoduleData<R> M = make_regular_bimodule(make_kx(2));
  BiHomAlgebra<R> sum = assemble_product(M);
  BimoduleData<R> back = split_product(sum, 2);
  CHECK(back.algebra.mu == M.algebra.mu);
  CHECK(*back.left == *M.left);
  CHECK(*back.right == *M.right);
  CHECK(*back.muM == *M.muM);
  CHECK(back.alphaM == M.alphaM);

  // K[x]/(x^4) is not a block product along a 2+2 split (x.x = x^2 leaks)
  CHECK_THROWS_AS(split_product(make_kx(4), 2), ShapeError);
}

TEST_CASE("infbh_coproduct: zero-dimensional M returns C itself") {
  BicomoduleData<R> M;
  M.coalgebra = make_dual_kx(2);
  M.mdim = 0;
  M.rho = Tensor3<R>(0, 2, 0);
  M.phi = Tensor3<R>(0, 0, 2);
  M.deltaM = Tensor3<R>(0, 0, 0);
  M.psiM = Mat<R>(0, 0);
  M.omegaM = Mat<R>(0, 0);
  auto r = infbh_coproduct(M);
  REQUIRE(r.ok());
  CHECK(r.value->delta == M.coalgebra.delta);
}

TEST_CASE("infbh_coproduct: regular bicomodule and its converse") {
  BicomoduleData<R> M = make_regular_bicomodule(make_dual_kx(3));
  auto r = infbh_coproduct(M);
  REQUIRE(r.ok());
  CHECK(r.value->dim == 6);
  BicomoduleData<R> back = split_coproduct(*r.value, 3);
  CHECK(back.coalgebra.delta == M.coalgebra.delta);
  CHECK(*back.rho == *M.rho);

  BicomoduleData<R> bad = M;
  (*bad.deltaM)(2, 1, 1) += R(1);
  auto r2 = infbh_coproduct(bad);
  CHECK_FALSE(r2.value.has_value());
  BiHomCoalgebra<R> sum = assemble_coproduct(bad);
  CHECK_FALSE(check_bihom_coalgebra(sum).passed());
}

TEST_CASE("biproduct: M = 0 returns B, catalog preset passes, perturbation consistent") {
  InfBialgebra<R> B = make_canonical(2, R(1), true);
  HopfBimodule<R> H0;
  H0.bialgebra = B;
  H0.mdim = 0;
  H0.left = Tensor3<R>(0, 2, 0);
  H0.right = Tensor3<R>(0, 0, 2);
  H0.rho = Tensor3<R>(0, 2, 0);
  H0.phi = Tensor3<R>(0, 0, 2);
  H0.alphaM = H0.betaM = H0.psiM = H0.omegaM = Mat<R>(0, 0);
  H0.muM = Tensor3<R>(0, 0, 0);
  H0.deltaM = Tensor3<R>(0, 0, 0);
  auto r0 = biproduct(H0);
  REQUIRE(r0.ok());
  CHECK(r0.value->mu == B.mu);
  CHECK(r0.value->delta == B.delta);

  Record rec = catalog_get("qt-biproduct-dim2");
  const auto& H = std::get<HopfBimodule<R>>(rec.value);
  auto r = biproduct(H);
  REQUIRE(r.ok());
  CHECK(r.value->lambda == H.bialgebra.lambda);  // weight preserved
  CHECK(r.value->dim == 4);

  // perturb one coaction entry: the preconditions fail AND the assembled
  // bialgebra fails check_inf_bialgebra, witnessing the iff consistently
  HopfBimodule<R> bad = H;
  bad.phi(0, 1, 1) += R(1);
  auto r2 = biproduct(bad);
  CHECK_FALSE(r2.value.has_value());
  CHECK_FALSE(r2.preconditions.passed());
  InfBialgebra<R> sum = assemble_biproduct(bad);
  CHECK_FALSE(check_inf_bialgebra(sum).passed());
}

TEST_CASE("rb_semidirect: M = 0, regular module, and a broken RM") {
  Record rec = catalog_get("rb-id-lm1-kx2");
  const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
  auto r = rb_semidirect(rb);
  REQUIRE(r.ok());
  CHECK(r.value->algebra.dim == 4);

  RotaBaxterData<R> rb0 = rb;
  rb0.module = RotaBaxterModule<R>{0, Tensor3<R>(0, 2, 0), Tensor3<R>(0, 0, 2),
                                   Mat<R>(0, 0), Mat<R>(0, 0), Mat<R>(0, 0)};
  auto rz = rb_semidirect(rb0);
  REQUIRE(rz.ok());
  CHECK(rz.value->algebra.mu == rb.algebra.mu);
  CHECK(rz.value->RA == rb.RA);

  RotaBaxterData<R> bad = rb;
  bad.module->RM = R(2) * Mat<R>::identity(2);
  auto r2 = rb_semidirect(bad);
  CHECK_FALSE(r2.value.has_value());
  RotaBaxterData<R> sum = assemble_rb_semidirect(bad);
  ViolationReport<R> sum_rep = check_rota_baxter(sum);
  CHECK_FALSE(sum_rep.find("eq-CO4.20")->passed());
}

TEST_CASE("rb_to_dendriform: zero data, both variants on R = id weight -1") {
  BiHomAlgebra<R> A = make_kx(2);
  RotaBaxterData<R> rb0{A, R(0), Mat<R>(2, 2),
                        RotaBaxterModule<R>{2, A.mu, A.mu, A.alpha, A.beta, Mat<R>(2, 2)}};
  auto z = rb_to_dendriform(rb0, DendriformVariant::left);
  REQUIRE(z.ok());
  CHECK(z.value->algebra.succ == Tensor3<R>(2, 2, 2));
  CHECK(z.value->algebra.prec == Tensor3<R>(2, 2, 2));
  CHECK(z.value->prec_am == Tensor3<R>(2, 2, 2));
  CHECK(z.value->succ_ma == Tensor3<R>(2, 2, 2));

  Record rec = catalog_get("rb-id-lm1-kx2");
  const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
  auto l = rb_to_dendriform(rb, DendriformVariant::left);
  REQUIRE(l.ok());
  CHECK(l.value->algebra.prec == Tensor3<R>(2, 2, 2));  // a < b = ab - ab = 0
  CHECK(l.value->algebra.succ == rb.algebra.mu);        // a > b = ab
  auto rr = rb_to_dendriform(rb, DendriformVariant::right);
  REQUIRE(rr.ok());
  CHECK(rr.value->algebra.succ == Tensor3<R>(2, 2, 2));  // a > b = ab - ab = 0
  CHECK(rr.value->algebra.prec == rb.algebra.mu);        // a < b = ab
}

TEST_CASE("dendriform_to_prelie: classical reduction and the full chain") {
  Record rec = catalog_get("rb-id-lm1-kx3");
  const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
  auto den = rb_to_dendriform(rb, DendriformVariant::left);
  REQUIRE(den.ok());
  auto pl = dendriform_to_prelie(*den.value);
  REQUIRE(pl.ok());
  // chain R = id, lambda = -1: a o b = a > b - b < a = ab - 0 = ab
  CHECK(pl.value->algebra.circ == rb.algebra.mu);
  CHECK(pl.value->circL == den.value->succ_am);
  CHECK(pl.value->circR == den.value->succ_ma);

  // identity-maps reduction: a o b = a > b - b < a entrywise
  const DendriformAlgebra<R>& D = den.value->algebra;
  Mat<R> expect = D.succ.as_product_map() - D.prec.as_product_map() * flip<R>(3);
  CHECK(pl.value->algebra.circ.as_product_map() == expect);

  // singular structure map is refused; all-zero products keep every
  // dendriform axiom trivially true so only invertibility can fail
  DendriformBimodule<R> sing;
  sing.algebra = DendriformAlgebra<R>{2, Tensor3<R>(2, 2, 2), Tensor3<R>(2, 2, 2),
                                      Mat<R>::identity(2), Mat<R>::identity(2)};
  sing.mdim = 2;
  sing.succ_am = sing.prec_am = Tensor3<R>(2, 2, 2);
  sing.succ_ma = sing.prec_ma = Tensor3<R>(2, 2, 2);
  sing.alphaM = Mat<R>(2, 2);
  sing.alphaM(1, 1) = R(1);  // diag(0,1): singular, commutes with betaM
  sing.betaM = Mat<R>::identity(2);
  REQUIRE(check_dendriform_bimodule(sing).passed());
  CHECK_THROWS_AS(dendriform_to_prelie(sing), NotInvertibleError);
}

TEST_CASE("direct sums: zero-dimensional M returns the algebra itself") {
  Record rec = catalog_get("rb-id-lm1-kx2");
  const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
  auto den = rb_to_dendriform(rb, DendriformVariant::left);
  REQUIRE(den.ok());
  DendriformBimodule<R> D0;
  D0.algebra = den.value->algebra;
  D0.mdim = 0;
  D0.succ_am = D0.prec_am = Tensor3<R>(0, 2, 0);
  D0.succ_ma = D0.prec_ma = Tensor3<R>(0, 0, 2);
  D0.alphaM = D0.betaM = Mat<R>(0, 0);
  auto ds = dendriform_direct_sum(D0);
  REQUIRE(ds.ok());
  CHECK(ds.value->prec == D0.algebra.prec);
  CHECK(ds.value->succ == D0.algebra.succ);

  auto pl = dendriform_to_prelie(*den.value);
  REQUIRE(pl.ok());
  PreLieBimodule<R> P0;
  P0.algebra = pl.value->algebra;
  P0.mdim = 0;
  P0.circL = Tensor3<R>(0, 2, 0);
  P0.circR = Tensor3<R>(0, 0, 2);
  P0.alphaM = P0.betaM = Mat<R>(0, 0);
  auto ps = prelie_direct_sum(P0);
  REQUIRE(ps.ok());
  CHECK(ps.value->circ == P0.algebra.circ);
}

TEST_CASE("direct sums: dendriform and pre-Lie, both directions") {
  Record rec = catalog_get("rb-id-lm1-kx2");
  const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
  auto den = rb_to_dendriform(rb, DendriformVariant::right);
  REQUIRE(den.ok());
  auto ds = dendriform_direct_sum(*den.value);
  REQUIRE(ds.ok());
  CHECK(ds.value->dim == 4);

  DendriformBimodule<R> bad = *den.value;
  bad.succ_am(0, 1, 1) += R(1);
  auto ds2 = dendriform_direct_sum(bad);
  CHECK_FALSE(ds2.value.has_value());
  CHECK_FALSE(check_dendriform(assemble_dendriform_direct_sum(bad)).passed());

  auto pl = dendriform_to_prelie(*den.value);
  REQUIRE(pl.ok());
  auto ps = prelie_direct_sum(*pl.value);
  REQUIRE(ps.ok());
  CHECK(ps.value->dim == 4);

  PreLieBimodule<R> badp = *pl.value;
  badp.circL(0, 1, 1) += R(1);
  auto ps2 = prelie_direct_sum(badp);
  CHECK_FALSE(ps2.value.has_value());
  CHECK_FALSE(check_prelie(assemble_prelie_direct_sum(badp)).passed());
}

TEST_CASE("hopf_to_prelie_powers: zero-coaction case and Example 2.9") {
  // zero Delta, zero coactions, lambda = 0: every star product vanishes
  InfBialgebra<R> B;
  B.dim = 2;
  B.lambda = R(0);
  B.mu = make_kx(2).mu;
  B.delta = Tensor3<R>(2, 2, 2);
  B.alpha = B.beta = B.psi = B.omega = Mat<R>::identity(2);
  HopfBimodule<R> H;
  H.bialgebra = B;
  H.mdim = 2;
  H.left = B.mu;
  H.right = B.mu;
  H.rho = Tensor3<R>(2, 2, 2);
  H.phi = Tensor3<R>(2, 2, 2);
  H.alphaM = H.betaM = H.psiM = H.omegaM = Mat<R>::identity(2);
  auto r0 = hopf_to_prelie_powers(H);
  REQUIRE(r0.ok());
  CHECK(r0.value->algebra.circ == Tensor3<R>(2, 2, 2));
  CHECK(r0.value->circL == Tensor3<R>(2, 2, 2));
  CHECK(r0.value->circR == Tensor3<R>(2, 2, 2));
  auto r0i = hopf_to_prelie_inverses(H);
  REQUIRE(r0i.ok());
  CHECK(r0i.value->algebra.circ == Tensor3<R>(2, 2, 2));

  for (const R& lam : {R(1), R(2)}) {
    HopfBimodule<R> E = make_example_29(make_canonical(2, lam, true));
    auto r = hopf_to_prelie_powers(E);
    CHECK(r.ok());
    auto ri = hopf_to_prelie_inverses(E);
    CHECK(ri.ok());
  }

  // perturbed rho: precondition failure
  HopfBimodule<R> badH = make_example_29(make_canonical(2, R(1), true));
  badH.rho(0, 1, 1) += R(1);
  auto rbad = hopf_to_prelie_powers(badH);
  CHECK_FALSE(rbad.value.has_value());

  // singular psiM on the zero-coaction Hopf bimodule (still valid since
  // rho = phi = Delta = 0): the inverses variant refuses
  HopfBimodule<R> sing = H;
  sing.psiM = Mat<R>(2, 2);
  sing.psiM(1, 1) = R(1);
  REQUIRE(check_hopf_bimodule(sing).passed());
  CHECK_THROWS_AS(hopf_to_prelie_inverses(sing), NotInvertibleError);
}

TEST_CASE("construction closure over applicable catalog presets") {
  for (const char* name :
       {"regular-bimodule-kx2", "regular-bimodule-kx3", "regular-bimodule-kx4"}) {
    Record rec = catalog_get(name);
    const auto& M = std::get<BimoduleData<R>>(rec.value);
    CHECK(infbh_product(M).ok());
  }
  for (const char* name : {"regular-bicomodule-dualkx2", "regular-bicomodule-dualkx3"}) {
    Record rec = catalog_get(name);
    const auto& M = std::get<BicomoduleData<R>>(rec.value);
    CHECK(infbh_coproduct(M).ok());
  }
  for (const char* name :
       {"rb-zero-l0-kx2", "rb-zero-l2-kx2", "rb-id-lm1-kx2", "rb-id-lm1-kx3"}) {
    Record rec = catalog_get(name);
    const auto& rb = std::get<RotaBaxterData<R>>(rec.value);
    CHECK(rb_semidirect(rb).ok());
    auto dl = rb_to_dendriform(rb, DendriformVariant::left);
    auto dr = rb_to_dendriform(rb, DendriformVariant::right);
    CHECK(dl.ok());
    CHECK(dr.ok());
    CHECK(dendriform_to_prelie(*dl.value).ok());
    CHECK(dendriform_to_prelie(*dr.value).ok());
    CHECK(dendriform_direct_sum(*dl.value).ok());
    CHECK(prelie_direct_sum(*dendriform_to_prelie(*dl.value).value).ok());
  }
  for (const char* name : {"ex29-l0-kx2", "ex29-l1-kx2", "ex29-lm1-kx2", "ex29-l2-kx2",
                           "ex29-l3-kx2", "qt-biproduct-dim2"}) {
    Record rec = catalog_get(name);
    const auto& H = std::get<HopfBimodule<R>>(rec.value);
    CHECK(hopf_to_prelie_powers(H).ok());
    CHECK(hopf_to_prelie_inverses(H).ok());
  }
}
