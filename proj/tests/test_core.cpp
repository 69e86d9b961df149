#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "linalg.hpp"
#include "rational.hpp"

using namespace bihom;

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int next(int n) { return int(g() % std::uint64_t(n)); }
  Rational rat() {
    int num = next(41) - 20;
    int den = 1 + next(9);
    return Rational(num, den);
  }
};

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(scalar_to_string(Rational(-3, 6)) == "-1/2");
  CHECK(scalar_to_string(Rational(4, 2)) == "2");
  CHECK(scalar_to_string(Rational(0, 7)) == "0");
  CHECK(scalar_parse("-1/2") == Rational(-1, 2));
  CHECK(scalar_parse("5") == Rational(5));
  CHECK(scalar_parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(scalar_parse("1.5"), ParseError);
  CHECK_THROWS_AS(scalar_parse("1/0"), ParseError);
  CHECK_THROWS_AS(scalar_parse(""), ParseError);
}

TEST_CASE("field axioms on random rationals") {
  Rng rng(12345);
  for (int t = 0; t < 200; ++t) {
    Rational a = rng.rat(), b = rng.rat(), c = rng.rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!(a == Rational(0))) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("prime field arithmetic") {
  using F = Fp<1000003>;
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    F a(rng.next(2000) - 1000), b(rng.next(2000) - 1000), c(rng.next(2000) - 1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == F(0));
    if (a != F(0)) CHECK(a * a.inverse() == F(1));
  }
}

TEST_CASE("matrix compose, apply, kron, flip") {
  Mat<Rational> f = Mat<Rational>::identity(2);
  f(0, 1) = Rational(3);
  Mat<Rational> g(2, 2);
  g(0, 0) = Rational(2);
  g(1, 0) = Rational(1);
  g(1, 1) = Rational(-1);
  Vec<Rational> v = {Rational(1), Rational(2)};
  CHECK((f * g).apply(v) == f.apply(g.apply(v)));

  // flip(2) sends e_1 (x) e_2 to e_2 (x) e_1 (0-indexed: e0 (x) e1 -> e1 (x) e0)
  Vec<Rational> e01 = tensor_prod(basis_vec<Rational>(2, 0), basis_vec<Rational>(2, 1));
  Vec<Rational> e10 = tensor_prod(basis_vec<Rational>(2, 1), basis_vec<Rational>(2, 0));
  CHECK(flip<Rational>(2).apply(e01) == e10);

  Mat<Rational> kr = kron(f, g);
  Vec<Rational> w = {Rational(2), Rational(-1)};
  CHECK(kr.apply(tensor_prod(v, w)) == tensor_prod(f.apply(v), g.apply(w)));
}

TEST_CASE("invert: identity, diagonal, singular rank") {
  CHECK(invert(Mat<Rational>::identity(3)) == Mat<Rational>::identity(3));
  Mat<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(3);
  Mat<Rational> di = invert(d);
  CHECK(di(0, 0) == Rational(1, 2));
  CHECK(di(1, 1) == Rational(1, 3));
  Mat<Rational> s(3, 3);
  s(0, 0) = Rational(1);
  s(1, 0) = Rational(2);  // rank 1
  try {
    invert(s);
    CHECK(false);
  } catch (const NotInvertibleError& e) {
    CHECK(e.rank == 1);
  }
}

TEST_CASE("compose(invert(f), f) = identity for random invertible maps") {
  Rng rng(7);
  int found = 0;
  for (int t = 0; t < 200 && found < 40; ++t) {
    Mat<Rational> m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Rational(rng.next(7) - 3);
    try {
      Mat<Rational> mi = invert(m);
      CHECK(mi * m == Mat<Rational>::identity(3));
      CHECK(m * mi == Mat<Rational>::identity(3));
      ++found;
    } catch (const NotInvertibleError&) {
    }
  }
  CHECK(found >= 40);
}

TEST_CASE("contract_mul on small algebras") {
  // 1-dim idempotent algebra: e.e = e
  Tensor3<Rational> one(1, 1, 1);
  one(0, 0, 0) = Rational(1);
  Vec<Rational> e = {Rational(1)};
  CHECK(eval_mul(one, e, e) == e);

  // zero product
  Tensor3<Rational> zero(2, 2, 2);
  Vec<Rational> any = {Rational(3), Rational(-2)};
  CHECK(is_zero(eval_mul(zero, any, any)));

  // K[x]/(x^2): x * x = 0
  BiHomAlgebra<R> kx2 = make_kx(2);
  Vec<Rational> x = basis_vec<Rational>(2, 1);
  CHECK(is_zero(eval_mul(kx2.mu, x, x)));
  // and 1 * x = x
  CHECK(eval_mul(kx2.mu, basis_vec<Rational>(2, 0), x) == x);
}

TEST_CASE("contract_mul is bilinear") {
  Rng rng(31);
  Tensor3<Rational> mu(3, 3, 3);
  for (int t = 0; t < 5; ++t) mu(rng.next(3), rng.next(3), rng.next(3)) = rng.rat();
  for (int t = 0; t < 50; ++t) {
    Vec<Rational> x(3), x2(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = rng.rat();
      x2[i] = rng.rat();
      y[i] = rng.rat();
    }
    CHECK(eval_mul(mu, x + x2, y) == eval_mul(mu, x, y) + eval_mul(mu, x2, y));
    Rational c = rng.rat();
    CHECK(eval_mul(mu, c * x, y) == c * eval_mul(mu, x, y));
  }
}

TEST_CASE("eval helpers are linear and match hand contraction") {
  // Delta = 0 maps everything to zero
  Tensor3<Rational> zero(2, 2, 2);
  CHECK(eval_delta(zero, Vec<Rational>{Rational(1), Rational(5)}).is_zero());

  // Delta(a) = -lambda (a (x) 1) on K[x]/(x^2), lambda = 2, v = x
  InfBialgebra<R> B = make_canonical(2, Rational(2), true);
  Mat<Rational> d = eval_delta(B.delta, basis_vec<Rational>(2, 1));
  CHECK(d(1, 0) == Rational(-2));
  CHECK(d(0, 0) == Rational(0));
  CHECK(d(0, 1) == Rational(0));
  CHECK(d(1, 1) == Rational(0));

  // linearity of eval_delta
  Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    Vec<Rational> v(2), w(2);
    for (int i = 0; i < 2; ++i) {
      v[i] = rng.rat();
      w[i] = rng.rat();
    }
    Mat<Rational> lhs = eval_delta(B.delta, v + w);
    Mat<Rational> rhs = eval_delta(B.delta, v) + eval_delta(B.delta, w);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rho of Example 2.9 matches brute-force contraction") {
  InfBialgebra<R> B = make_canonical(2, Rational(1), true);
  HopfBimodule<R> H = make_example_29(B);
  // rho(x (x) 1): Delta(x) (x) psi(1) = -1 (x (x) 1) (x) 1, so the
  // coefficient of e_x (x) (e_1 (x) e_1) is -1. M-index of (u,v) is 2u+v.
  Mat<Rational> co = eval_coaction(H.rho, basis_vec<Rational>(4, 2));  // x (x) 1
  for (int c = 0; c < 2; ++c)
    for (int m = 0; m < 4; ++m) {
      Rational expect = (c == 1 && m == 0) ? Rational(-1) : Rational(0);
      CHECK(co(c, m) == expect);
    }
}

TEST_CASE("tensor shape errors") {
  Tensor3<Rational> t(2, 2, 2);
  CHECK_THROWS_AS(t.at(2, 0, 0), ShapeError);
  Tensor3<Rational> mu(2, 2, 2);
  Vec<Rational> bad = {Rational(1)};
  CHECK_THROWS_AS(eval_mul(mu, bad, bad), ShapeError);
}
