#include "doctest.h"
#include "interpolatia/error.hpp"
#include "interpolatia/families/family.hpp"

using namespace interpolatia;
using namespace interpolatia::families;
using exactalg::MPoly;
using exactalg::Var;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RF tau() { return RF::var(Var::tau); }
RF alpha() { return RF::var(Var::alpha); }
RF q() { return RF::var(Var::q); }
RF t() { return RF::var(Var::t); }
RF a() { return RF::var(Var::a); }
RF one() { return RF(1L); }

const Family kAll[] = {Family::AJ, Family::BJ, Family::AM, Family::BM};

}  // namespace

TEST_CASE("shifted points and norms") {
  auto p = shift({Family::AJ, 2}, P({1, 0}));
  CHECK(p[0] == one() + tau());
  CHECK(p[1] == RF());
  auto m = shift({Family::AM, 2}, P({0, 0}));
  CHECK(m[0] == t());
  CHECK(m[1] == one());
  CHECK(shift({Family::BM, 1}, P({2}))[0] == a() * q() * q());
  CHECK(norm_at({Family::AJ, 2}, p) == one() + tau());
  CHECK(norm_at({Family::BJ, 1}, shift({Family::BJ, 1}, P({1}))) == (one() + alpha()).pow(2));
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions::partitions_up_to(n, 5))
      for (const auto& m2 : partitions::partitions_up_to(n, l.size())) {
        if (!partitions::contains(l, m2) || l == m2) continue;
        CHECK(shifted_norm({Family::AJ, n}, l) - shifted_norm({Family::AJ, n}, m2) == RF(static_cast<long>(l.size() - m2.size())));
        for (Family f : kAll) CHECK(!(shifted_norm({f, n}, l) - shifted_norm({f, n}, m2)).is_zero());
      }
}

TEST_CASE("hooklength examples") {
  auto h = hooklengths({Family::AJ, 1}, P({1}), {1, 1});
  CHECK(h.c == tau());
  CHECK(h.c_prime == one());
  CHECK(!h.d);
  auto m = hooklengths({Family::AM, 1}, P({2}), {1, 1});
  CHECK(m.c == one() - q() * t());
  CHECK(m.c_prime == one() - q() * q());
  auto b = hooklengths({Family::BJ, 2}, P({1, 0}), {1, 1});
  REQUIRE(b.d);
  CHECK(*b.d == one() + RF(2L) * tau() + RF(2L) * alpha());
  CHECK_THROWS_AS(hooklengths({Family::AJ, 1}, P({1}), {1, 2}), BoxOutsideShape);
}

TEST_CASE("psi examples") {
  FamilyConfig cfg(Family::AJ, 2);
  auto rts = partitions::enumerate_RT(P({1, 0}), 2);
  for (const auto& T : rts) CHECK(psi(cfg, T) == one());
  CHECK(psi({Family::AJ, 1}, partitions::distinguished_RT(P({1}))) == one());
}

TEST_CASE("normalizing factor: closed form against the tableau sum") {
  CHECK(H_factor({Family::AJ, 3}, P({1, 0, 0})) == one());
  CHECK(H_factor({Family::AJ, 1}, P({4})) == RF(24L));
  RF am = H_factor({Family::AM, 2}, P({2, 2}));
  CHECK(am == q() * q() * c_prime_product({Family::AM, 2}, P({2, 2})));
  CHECK(am == monic_value_serial({Family::AM, 2}, P({2, 2}), shift({Family::AM, 2}, P({2, 2}))));
  for (Family f : kAll)
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : partitions::partitions_up_to(n, 5)) {
        FamilyConfig cfg(f, n);
        CHECK_MESSAGE(H_factor(cfg, l) == monic_value_serial(cfg, l, shift(cfg, l)), cfg.to_string(), " ", l.to_string());
      }
}

TEST_CASE("adjacent coefficient examples") {
  RF am = adjacent_b({Family::AM, 2}, P({2, 2}), P({2, 1}));
  CHECK(am == t().inverse() * (one() - t() * t()) / (one() - t()) * (one() - q() * q()) / (one() - q()));
  RF bm = adjacent_b({Family::BM, 2}, P({2, 2}), P({2, 1}));
  RF a2 = a() * a();
  RF expect = q().inverse() * ((one() - t() * t()) * (one() - q().pow(3) * t() * a2)) /
              ((one() - t()) * (one() - q().pow(3) * t() * t() * a2)) * ((one() - q() * q()) * (one() - q() * q() * a2)) /
              ((one() - q()) * (one() - q() * a2));
  CHECK(bm == expect);
  for (int m = 0; m <= 6; ++m) CHECK(adjacent_b({Family::AJ, 1}, P({m + 1}), P({m})) == RF(static_cast<long>(m + 1)));
  CHECK_THROWS_AS(adjacent_b({Family::AJ, 2}, P({2, 2}), P({2, 0})), NotACover);
}

TEST_CASE("adjacent coefficients: closed form against two independent routes") {
  for (Family f : kAll)
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : partitions::partitions_up_to(n, 5))
        for (const auto& m : partitions::lower_covers(l)) {
          FamilyConfig cfg(f, n);
          RF closed = adjacent_b(cfg, l, m);
          RF direct = monic_value_serial(cfg, m, shift(cfg, l)) / H_factor(cfg, m);
          CHECK_MESSAGE(closed == direct, cfg.to_string(), " ", l.to_string(), " ", m.to_string());
          // Pieri route: ordinary Pieri coefficient rescaled by the normalizations.
          auto s0 = partitions::cover_box(l, m);
          FamilyConfig plain(is_jack(f) ? Family::AJ : Family::AM, n);
          RF pieri(1L);
          for (const Box& s : l.boxes())
            if (s.col == s0.col && s.row != s0.row) {
              auto hl = hooklengths(plain, l, s), hm = hooklengths(plain, m, s);
              pieri *= (hl.c / hl.c_prime) / (hm.c / hm.c_prime);
            }
          RF via = H_factor(cfg, l) / (H_factor(cfg, m) * (shifted_norm(cfg, l) - shifted_norm(cfg, m))) * pieri;
          CHECK_MESSAGE(closed == via, cfg.to_string(), " ", l.to_string(), " ", m.to_string());
          auto v = exactalg::cone_check(closed, cone_of(f));
          CHECK(v.status != exactalg::VerdictStatus::Refuted);
          if (is_jack(f)) CHECK(v.status == exactalg::VerdictStatus::Certified);
        }
}

TEST_CASE("tableau sum: vanishing and serial/parallel agreement") {
  for (Family f : kAll)
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions::partitions_up_to(n, 4))
        for (const auto& l : partitions::partitions_up_to(n, 5)) {
          FamilyConfig cfg(f, n);
          RF s = monic_value_serial(cfg, mu, shift(cfg, l));
          if (!partitions::contains(l, mu)) CHECK(s.is_zero());
          else CHECK(!s.is_zero());
          CHECK(s == monic_value_parallel(cfg, mu, shift(cfg, l)));
        }
}
