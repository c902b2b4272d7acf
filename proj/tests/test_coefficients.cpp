#include "doctest.h"
#include "interpolatia/coefficients/coefficients.hpp"
#include "interpolatia/error.hpp"

using namespace interpolatia;
using namespace interpolatia::coefficients;
using exactalg::Var;
using families::Family;
using interpolation::Normalization;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RF q() { return RF::var(Var::q); }
RF t() { return RF::var(Var::t); }
RF a() { return RF::var(Var::a); }
RF one() { return RF(1L); }
RF om(const RF& m) { return one() - m; }

const Family kAll[] = {Family::AJ, Family::BJ, Family::AM, Family::BM};

long binomial(int l, int m) {
  long r = 1;
  for (int i = 1; i <= m; ++i) r = r * (l - m + i) / i;
  return r;
}

}  // namespace

TEST_CASE("binomial coefficient examples") {
  FamilyConfig aj1(Family::AJ, 1);
  CHECK(b_direct(aj1, P({3}), P({2})) == RF(3L));
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= 10; ++m) CHECK(b_direct(aj1, P({l}), P({m})) == RF(l >= m ? binomial(l, m) : 0L));
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    for (const auto& l : partitions::partitions_up_to(2, 4)) {
      CHECK(b_direct(cfg, l, l) == one());
      for (const auto& m : partitions::partitions_up_to(2, 4))
        if (!partitions::contains(l, m)) CHECK(b_direct(cfg, l, m).is_zero());
    }
  }
}

TEST_CASE("three routes agree") {
  for (Family f : kAll)
    for (int n = 1; n <= 3; ++n) {
      FamilyConfig cfg(f, n);
      int cap = n == 3 ? 3 : 4;
      for (const auto& l : partitions::partitions_up_to(n, cap))
        for (const auto& m : partitions::partitions_up_to(n, cap)) {
          if (!partitions::contains(l, m)) continue;
          INFO(cfg.to_string(), " lambda=", l.to_string(), " mu=", m.to_string());
          RF direct = b_direct(cfg, l, m);
          CHECK(b_weighted(cfg, l, m) == direct);
          CHECK(b_recursive(cfg, l, m) == direct);
          CHECK(b_direct_parallel(cfg, l, m) == direct);
          if (partitions::covers(l, m)) CHECK(b_weighted(cfg, l, m) == a_adjacent(cfg, l, m));
        }
    }
}

TEST_CASE("AJ chain weights are 1/k!") {
  FamilyConfig cfg(Family::AJ, 3);
  for (const auto& chain : partitions::enumerate_chains(P({3, 2, 1}), P({1, 0, 0}))) CHECK(chain_weight(cfg, chain) == RF(exactalg::Rational(1, 120)));
}

TEST_CASE("inverse binomial coefficients") {
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    auto idx = partitions::partitions_up_to(2, f == Family::AJ ? 5 : 4);
    Matrix B = matrix_of(idx, [&](const Partition& l, const Partition& m) { return b_direct(cfg, l, m); });
    Matrix Bi = matrix_of(idx, [&](const Partition& l, const Partition& m) { return b_inverse(cfg, l, m); });
    Matrix I = matrix_of(idx, [](const Partition& l, const Partition& m) { return l == m ? RF(1L) : RF(); });
    CHECK(Bi * B == I);
    for (const auto& l : idx)
      for (const auto& m : idx) {
        CHECK(b_inverse_recursive(cfg, l, m) == b_inverse(cfg, l, m));
        if (f == Family::AJ && partitions::contains(l, m)) {
          long sign = (l.size() - m.size()) % 2 == 0 ? 1 : -1;
          CHECK(b_inverse(cfg, l, m) == RF(sign) * b_direct(cfg, l, m));
        }
      }
  }
}

TEST_CASE("LR coefficients") {
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    auto idx = partitions::partitions_up_to(2, 4);
    for (const auto& l : idx)
      for (const auto& m : idx)
        for (const auto& nu : partitions::partitions_up_to(2, 2)) {
          if (!partitions::contains(l, m)) continue;
          INFO(cfg.to_string(), " ", l.to_string(), " ", m.to_string(), " ", nu.to_string());
          RF w = lr_weighted(cfg, l, m, nu);
          CHECK(w == lr_via_bbb(cfg, l, m, nu));
          if (l == m) CHECK(w == b_direct(cfg, l, nu));
          if (partitions::covers(l, m)) CHECK(w == a_adjacent(cfg, l, m) * (b_direct(cfg, l, nu) - b_direct(cfg, m, nu)));
          if (l.size() > m.size() + nu.size() || !partitions::contains(l, nu)) CHECK(w.is_zero());
          if (partitions::contains(l, nu)) CHECK(w == lr_weighted(cfg, l, nu, m));
        }
  }
  FamilyConfig cfg(Family::AM, 2);
  for (const auto& l : partitions::partitions_up_to(2, 4))
    for (const auto& m : partitions::partitions_up_to(2, 2))
      for (const auto& nu : partitions::partitions_up_to(2, 2)) CHECK(lr_product_oracle(cfg, l, m, nu) == lr_via_bbb(cfg, l, m, nu));
}

TEST_CASE("structure constants") {
  FamilyConfig cfg(Family::BJ, 2);
  auto idx = partitions::partitions_up_to(2, 3);
  SymPoly unit = SymPoly::constant(cfg, one());
  SymPoly h11 = interpolation::interp_poly(cfg, P({1, 1}), Normalization::unital);
  for (const auto& l : idx)
    for (const auto& m : idx) {
      if (!partitions::contains(l, m)) continue;
      CHECK(structure_constants(cfg, unit, l, m) == (l == m ? one() : RF()));
      CHECK(structure_constants(cfg, h11, l, m) == lr_weighted(cfg, l, m, P({1, 1})));
    }
  SymPoly p = SymPoly::norm(cfg) * SymPoly::norm(cfg) + SymPoly::constant(cfg, RF(3L));
  SymPoly rebuilt(cfg);
  for (const auto& l : partitions::partitions_up_to(2, 2))
    rebuilt += interpolation::interp_poly(cfg, l, Normalization::unital).scaled(structure_constants(cfg, p, l, Partition::zero(2)));
  CHECK(rebuilt == p);
}

TEST_CASE("integral forms and integrality") {
  FamilyConfig am(Family::AM, 2), bm(Family::BM, 2);
  auto l = P({2, 2}), m = P({2, 1});
  CHECK(a_adjacent(am, l, m) == om(t() * t()) * om(q() * q()) / (t() * om(t()) * om(q())));
  CHECK(integral_forms(am, l, m).A ==
        -q() * om(q()) * om(t()) * om(q() * q()) * om(t() * t()) * om(q() * q() * t()) * om(q() * t() * t()));
  RF bm_expected = om(q()) * om(t()) * om(q() * q()) * om(t() * t()) * om(q() * q() * t()) * om(q() * t() * t()) *
                   om(q() * q() * a() * a()) * om(q() * q() * t() * a() * a()) * om(q().pow(3) * t() * a() * a()) /
                   (q().pow(6) * t().pow(2) * a().pow(3));
  CHECK(integral_forms(bm, l, m).A == bm_expected);
  CHECK(integral_forms(am, P({2, 0}), m).A.is_zero());
  auto vm = integrality(bm, bm_expected);
  CHECK(vm.holds);
  CHECK(vm.sign == -1);
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    for (const auto& x : partitions::partitions_up_to(2, 4))
      for (const auto& y : partitions::lower_covers(x)) {
        INFO(cfg.to_string(), " ", x.to_string(), " ", y.to_string());
        auto forms = integral_forms(cfg, x, y);
        CHECK(forms.A == families::c_product(cfg, y) * families::H_factor(cfg, y) * a_adjacent(cfg, x, y));
        CHECK(integrality(cfg, forms.A).holds);
      }
  }
  FamilyConfig aj1(Family::AJ, 1);
  for (int k = 0; k <= 5; ++k) CHECK(integrality(aj1, integral_forms(aj1, P({k + 1}), P({k})).A).holds);
  CHECK(!integrality(FamilyConfig(Family::AJ, 1), RF(-1L)).holds);
  CHECK(to_gamma_parameters(q()) == one() + RF::var(Var::gamma));
}

TEST_CASE("commutation and C = B^-1 D B") {
  FamilyConfig cfg(Family::AM, 2);
  CHECK(commutation_holds(cfg, 3));
  CHECK(cd_relation_holds(cfg, 3, interpolation::interp_poly(cfg, P({1, 0}), Normalization::unital)));
}

TEST_CASE("tables") {
  auto tab = table(FamilyConfig(Family::AJ, 1), Kind::b, 2);
  CHECK(tab.entries.size() == 6);
  auto csv = tab.to_csv();
  CHECK(csv.rfind("family,n,kind,lambda,mu,nu,value\n", 0) == 0);
  CHECK(csv.find("AJ,1,b,\"[2]\",\"[1]\",,\"2\"") != std::string::npos);
  CHECK(table(FamilyConfig(Family::AJ, 2), Kind::a, 2).entries.size() == 3);
}
