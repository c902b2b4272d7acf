#include "doctest.h"
#include "interpolatia/error.hpp"
#include "interpolatia/interpolation/interpolation.hpp"

using namespace interpolatia;
using namespace interpolatia::interpolation;
using exactalg::Point;
using exactalg::Rational;
using exactalg::Var;
using families::Family;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RF tau() { return RF::var(Var::tau); }
RF one() { return RF(1L); }
XExp X(std::initializer_list<int> v) {
  XExp e{};
  int i = 0;
  for (int x : v) e[i++] = static_cast<std::int16_t>(x);
  return e;
}

const Family kAll[] = {Family::AJ, Family::BJ, Family::AM, Family::BM};

Rational falling(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Factorial Schur polynomial by the bialternant formula with falling factorials.
Rational factorial_schur(const Partition& mu, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n)), den = num;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num[i][j] = falling(x[i], mu.part(j + 1) + n - 1 - j);
      den[i][j] = falling(x[i], n - 1 - j);
    }
  return det(num) / det(den);
}

}  // namespace

TEST_CASE("ordinary polynomial examples") {
  CHECK(jack_macdonald({Family::AJ, 2}, P({1, 0})).to_string() == "x1 + x2");
  CHECK(jack_macdonald({Family::AM, 2}, P({1, 1})).to_string() == "x1*x2");
  auto p2 = jack_macdonald({Family::AJ, 2}, P({2, 0}));
  CHECK(p2.coefficient(X({2, 0})) == one());
  CHECK(p2.coefficient(X({0, 2})) == one());
  CHECK(p2.coefficient(X({1, 1})) == RF(2L) * tau() / (one() + tau()));
  Point at1;
  at1.set(Var::tau, Rational(1));
  CHECK(p2.coefficient(X({1, 1})).eval(at1) == 1);
  CHECK_THROWS_AS(jack_macdonald({Family::AJ, 4}, P({1, 0, 0, 0})), CapExceeded);
  CHECK_THROWS_AS(interp_poly({Family::AJ, 2}, P({7, 0}), Normalization::monic), CapExceeded);
}

TEST_CASE("interpolation polynomial examples") {
  CHECK(interp_poly({Family::AJ, 2}, P({1, 0}), Normalization::monic).to_string() == "x1 + x2 - tau");
  for (int m = 0; m <= 5; ++m) {
    auto h = interp_poly({Family::AJ, 1}, P({m}), Normalization::monic);
    for (int x = -3; x <= 8; ++x) CHECK(h.eval_at({RF(static_cast<long>(x))}) == RF(Rational(falling(x, m))));
  }
  FamilyConfig cfg(Family::AM, 2);
  auto mono = interp_poly(cfg, P({2, 1}), Normalization::monic);
  CHECK(interp_poly(cfg, P({2, 1}), Normalization::unital).scaled(families::H_factor(cfg, P({2, 1}))) == mono);
  CHECK(interp_poly(cfg, P({2, 1}), Normalization::integral) == mono.scaled(families::c_product(cfg, P({2, 1}))));
}

TEST_CASE("vanishing and normalization at shifted points") {
  for (Family f : kAll)
    for (int n = 1; n <= 2; ++n) {
      FamilyConfig cfg(f, n);
      for (const auto& mu : partitions::partitions_up_to(n, 3)) {
        auto h = interp_poly(cfg, mu, Normalization::unital);
        CHECK(h.eval_at(families::shift(cfg, mu)) == one());
        for (const auto& l : partitions::partitions_up_to(n, 4)) {
          if (l == mu) continue;
          if (l.size() <= mu.size() || !partitions::contains(l, mu)) CHECK(h.eval_at(families::shift(cfg, l)).is_zero());
        }
      }
    }
}

TEST_CASE("solver oracle agrees with the tableau formula") {
  for (Family f : kAll)
    for (int n = 1; n <= 2; ++n) {
      FamilyConfig cfg(f, n);
      for (int d = 0; d <= 4; ++d) {
        auto basis = oracle_unital_basis(cfg, d);
        for (const auto& [mu, h] : basis) {
          INFO(cfg.to_string(), " mu=", mu.to_string());
          CHECK(h == interp_poly(cfg, mu, Normalization::unital));
        }
      }
    }
  FamilyConfig a1(Family::AJ, 1);
  std::map<Partition, RF> zeros, squares;
  for (const auto& l : partitions::partitions_up_to(1, 2)) {
    zeros[l] = RF();
    squares[l] = RF(static_cast<long>(l.part(1) * l.part(1)));
  }
  CHECK(interp_solver_oracle(a1, 2, zeros).is_zero());
  CHECK(interp_solver_oracle(a1, 2, squares).to_string() == "x1^2");
  CHECK_THROWS_AS(interp_solver_oracle(a1, 2, {}), std::invalid_argument);
}

TEST_CASE("symmetry, degree, leading terms") {
  for (Family f : kAll)
    for (int n = 1; n <= 3; ++n) {
      FamilyConfig cfg(f, n);
      int cap = n == 3 ? 3 : 4;
      for (const auto& mu : partitions::partitions_up_to(n, cap)) {
        INFO(cfg.to_string(), " mu=", mu.to_string());
        auto h = interp_poly(cfg, mu, Normalization::monic);
        CHECK(h.is_weyl_invariant());
        int scale = f == Family::BJ ? 2 : 1;
        CHECK(h.degree() == scale * mu.size());
        XExp lead{};
        for (int i = 0; i < n; ++i) lead[i] = static_cast<std::int16_t>(scale * mu.part(i + 1));
        CHECK(h.coefficient(lead) == one());
        auto top = h.top_degree();
        if (f == Family::BM) top = top.nonnegative_part();
        CHECK(top == jack_macdonald(cfg, mu));
      }
    }
}

TEST_CASE("tau = 1 specialization matches factorial Schur") {
  Point at1;
  at1.set(Var::tau, Rational(1));
  const std::vector<std::vector<Rational>> points = {{7}, {Rational(5, 2), -3}, {9, 4, Rational(-1, 3)}, {2, 11, 6}};
  for (const auto& xs : points) {
    const int n = static_cast<int>(xs.size());
    FamilyConfig cfg(Family::AJ, n);
    std::vector<RF> x;
    for (const auto& v : xs) x.emplace_back(v);
    for (const auto& mu : partitions::partitions_up_to(n, n == 3 ? 4 : 5)) {
      RF v = interp_poly(cfg, mu, Normalization::monic).eval_at(x);
      CHECK(v.eval(at1) == factorial_schur(mu, xs));
    }
  }
}

TEST_CASE("pieri identity") {
  for (Family f : kAll)
    for (const auto& mu : partitions::partitions_up_to(2, 3)) {
      INFO(family_name(f), " mu=", mu.to_string());
      CHECK(pieri_check({f, 2}, mu));
    }
  CHECK(pieri_check({Family::AJ, 3}, P({1, 0, 0})));
  CHECK(pieri_check({Family::BM, 1}, P({2})));
}

TEST_CASE("basis expansions") {
  FamilyConfig cfg(Family::AJ, 2);
  auto h = interp_poly(cfg, P({2, 1}), Normalization::monic);
  auto in_monic = expand_in_monic_basis(h);
  REQUIRE(in_monic.size() == 1);
  CHECK(in_monic.begin()->second == one());
  auto ord = expand_in_ordinary_basis(jack_macdonald(cfg, P({2, 0})).scaled(RF(3L)) + jack_macdonald(cfg, P({1, 1})));
  CHECK(ord.size() == 2);
  CHECK(ord[P({2, 0})] == RF(3L));
  CHECK(ord[P({1, 1})] == one());
  auto shifted = jack_macdonald(cfg, P({1, 0})).shifted_by_ones();
  CHECK(shifted.to_string() == "x1 + x2 + 2");
}
