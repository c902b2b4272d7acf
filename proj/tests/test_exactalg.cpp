#include <random>

#include "doctest.h"
#include "interpolatia/error.hpp"
#include "interpolatia/exactalg/cone.hpp"

using namespace interpolatia;
using namespace interpolatia::exactalg;

namespace {

MPoly tau() { return MPoly::var(Var::tau); }
MPoly q() { return MPoly::var(Var::q); }
MPoly t() { return MPoly::var(Var::t); }
MPoly one() { return MPoly(1L); }

// Term-by-term oracle: convolution of dense univariate coefficient lists.
std::vector<long> dense_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

MPoly from_dense(const std::vector<long>& c, Var v) {
  MPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) p += MPoly::var(v, static_cast<int>(i)).scaled(c[i]);
  return p;
}

MPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), var(0, 5);
  MPoly p;
  for (int k = 0; k < 4; ++k) {
    Monomial m;
    for (int j = 0; j < 2; ++j) {
      int v = var(rng), e = ex(rng);
      m = m * Monomial::of(v, e);
    }
    p += MPoly::term(m, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("mpoly arithmetic examples") {
  CHECK((tau() + one()) * (tau() - one()) == tau().pow(2) - one());
  CHECK(tau() + MPoly() == tau());
  MPoly lhs = (one() - q()) * (one() + q() + q().pow(2));
  CHECK(lhs == one() - q().pow(3));
  CHECK(lhs == from_dense(dense_mul({1, -1}, {1, 1, 1}), Var::q));
  CHECK((tau().pow(2) - tau() + one()).to_string() == "tau^2 - tau + 1");
  CHECK(MPoly::var(Var::tau).scaled(Rational(1, 2)).to_string() == "1/2*tau");
}

TEST_CASE("mpoly ring laws on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) {
      auto d = (a * b).divide_exact(b);
      REQUIRE(d);
      CHECK(*d == a);
    }
  }
}

TEST_CASE("gcd examples") {
  CHECK(gcd(tau().pow(2) - one(), tau() - one()) == tau() - one());
  MPoly p = tau().scaled(2) + MPoly(4L);
  CHECK(gcd(p, MPoly()) == tau() + MPoly(2L));
  MPoly g = gcd((one() - q()) * (one() - t()), (one() - q()) * (one() - q() * t()));
  CHECK(g == q() - one());
  CHECK(gcd_reference((one() - q()) * (one() - t()), (one() - q()) * (one() - q() * t())) == g);
  CHECK(RF::make(g, one()) == RF::make(one() - q(), one()).pow(1) * RF(-1L));
}

TEST_CASE("gcd of random products divides and recovers common factor") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    if (a.min_exponents().deg != 0 || b.min_exponents().deg != 0 || c.min_exponents().deg != 0) continue;
    MPoly g = gcd(a * c, b * c);
    CHECK((a * c).divide_exact(g));
    CHECK((b * c).divide_exact(g));
    CHECK(g.divide_exact(c.integer_primitive()));
    CHECK(g == gcd_reference(a * c, b * c));
  }
}

TEST_CASE("rational function normal form") {
  RF f = RF::make(tau().pow(2) - one(), tau() - one());
  CHECK(f == RF(tau() + one()));
  CHECK(f.is_polynomial());
  CHECK_THROWS_AS(RF::make(one(), MPoly()), ZeroDenominator);
  RF g = RF::make(tau().pow(3) + one(), tau() + one());
  CHECK(g.to_string() == "tau^2 - tau + 1");
  RF h = RF::make(one(), tau() - one());
  CHECK(h.den().leading().coef > 0);
  RF k = RF::make(one(), one() - tau());
  CHECK(k == -h);
  CHECK(k.to_string() == "(-1)/(tau - 1)");
}

TEST_CASE("rational function evaluation is a homomorphism") {
  RF f = RF::make(tau() + one(), tau() - MPoly(2L));
  RF g = RF::make(tau().pow(2), tau() + MPoly(3L));
  Point p;
  p.set(Var::tau, Rational(5, 3));
  CHECK(RF(tau() + one()).eval(Point().set(Var::tau, 2)) == 3);
  CHECK((f * g).eval(p) == f.eval(p) * g.eval(p));
  CHECK((f + g).eval(p) == f.eval(p) + g.eval(p));
  CHECK_THROWS_AS(f.eval(Point().set(Var::tau, 2)), PoleAtPoint);
  CHECK((f / f).is_one());
  CHECK(f - f == RF());
}

TEST_CASE("cone checks") {
  RF f(tau().pow(2) - tau() + one());
  auto v = cone_check(f, Cone::AJ);
  CHECK(v.status == VerdictStatus::Certified);
  REQUIRE(v.polya);
  CHECK(v.polya->N == 1);
  CHECK(recheck(f, Cone::AJ, v));

  auto neg = cone_check(RF(-1L), Cone::AJ);
  CHECK(neg.status == VerdictStatus::Refuted);
  REQUIRE(neg.witness);
  CHECK(recheck(RF(-1L), Cone::AJ, neg));

  RF a = RF::make((one() - t().pow(2)) * (one() - q().pow(2)), (one() - t()) * (one() - q()) * t());
  auto av = cone_check(a, Cone::AM);
  CHECK(av.status == VerdictStatus::Certified);
  CHECK(av.atoms);
  CHECK(recheck(a, Cone::AM, av));

  RF b = RF::make((one() - q()) * (one() - q() * t()), t() - q());
  auto bv = cone_check(b, Cone::AM);
  CHECK(bv.status == VerdictStatus::Refuted);
  CHECK(recheck(b, Cone::AM, bv));

  CHECK_THROWS_AS(cone_check(RF(q()), Cone::AJ), WrongParameterSet);
}

TEST_CASE("substitution and limits") {
  std::array<std::optional<RF>, kVarCount> sub{};
  sub[index_of(Var::tau)] = RF(MPoly(1L));
  RF f = RF::make(tau().pow(2) + one(), tau() + one());
  CHECK(f.substitute(sub) == RF(1L));
  auto lim = RF::make(tau().scaled(2) + one(), tau() + MPoly(3L)).limit_at_infinity(index_of(Var::tau));
  REQUIRE(lim);
  CHECK(*lim == RF(2L));
  CHECK(!f.limit_at_infinity(index_of(Var::tau)));
}
