// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "interpolatia/cli/cli.hpp"
#include "interpolatia/error.hpp"
#include "oracles.hpp"

using namespace interpolatia;
using coefficients::RF;
using exactalg::Var;
using families::Family;
using families::FamilyConfig;
using partitions::Partition;

namespace {

// Wall-clock limits in seconds; 0 means none.
constexpr double kLimitExamples = 1.0;
constexpr double kLimitThreeRoute = 600.0;
constexpr double kLimitOracle = 300.0;

const Family kAll[] = {Family::AJ, Family::BJ, Family::AM, Family::BM};

// The criterion-3 grid: (n, largest size).
const std::pair<int, int> kGrid[] = {{1, 6}, {2, 6}, {3, 5}};

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RF q() { return RF::var(Var::q); }
RF t() { return RF::var(Var::t); }
RF a() { return RF::var(Var::a); }
RF om(const RF& m) { return RF(1L) - m; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome c1_am_example() {
  Outcome o;
  FamilyConfig cfg(Family::AM, 2);
  RF a_expected = om(t() * t()) * om(q() * q()) / (t() * om(t()) * om(q()));
  RF A_expected = -q() * om(q()) * om(t()) * om(q() * q()) * om(t() * t()) * om(q() * q() * t()) * om(q() * t() * t());
  if (coefficients::a_adjacent(cfg, P({2, 2}), P({2, 1})) != a_expected) o.fail("a differs");
  if (coefficients::integral_forms(cfg, P({2, 2}), P({2, 1})).A != A_expected) o.fail("A differs");
  return o;
}

Outcome c2_bm_example() {
  Outcome o;
  FamilyConfig cfg(Family::BM, 2);
  RF expected = om(q()) * om(t()) * om(q() * q()) * om(t() * t()) * om(q() * q() * t()) * om(q() * t() * t()) *
                om(q() * q() * a() * a()) * om(q() * q() * t() * a() * a()) * om(q().pow(3) * t() * a() * a()) /
                (q().pow(6) * t().pow(2) * a().pow(3));
  if (coefficients::integral_forms(cfg, P({2, 2}), P({2, 1})).A != expected) o.fail("A differs");
  return o;
}

Outcome c3_three_routes() {
  Outcome o;
  long pairs = 0;
  for (Family f : kAll)
    for (auto [n, d] : kGrid) {
      if (n == 3 && d > 5) continue;
      FamilyConfig cfg(f, n);
      auto all = partitions::partitions_up_to(n, d);
      for (const auto& l : all)
        for (const auto& m : all) {
          if (!partitions::contains(l, m)) continue;
          ++pairs;
          RF direct = coefficients::b_direct(cfg, l, m);
          if (coefficients::b_weighted(cfg, l, m) != direct || coefficients::b_recursive(cfg, l, m) != direct)
            o.fail(cfg.to_string() + " " + l.to_string() + " " + m.to_string());
        }
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome c4_solver_oracle() {
  Outcome o;
  long count = 0;
  for (Family f : kAll)
    for (int n = 1; n <= 2; ++n) {
      FamilyConfig cfg(f, n);
      for (const auto& mu : partitions::partitions_up_to(n, 4)) {
        std::map<Partition, RF> values;
        for (const auto& l : partitions::partitions_up_to(n, mu.size())) values[l] = l == mu ? RF(1L) : RF();
        ++count;
        if (interpolation::interp_poly(cfg, mu, interpolation::Normalization::unital) != interpolation::interp_solver_oracle(cfg, mu.size(), values))
          o.fail(cfg.to_string() + " mu=" + mu.to_string());
      }
    }
  if (o.pass) o.detail = std::to_string(count) + " polynomials";
  return o;
}

Outcome c5_vanishing() {
  Outcome o;
  long evals = 0;
  for (Family f : kAll)
    for (int n = 1; n <= 2; ++n) {
      FamilyConfig cfg(f, n);
      for (const auto& mu : partitions::partitions_up_to(n, 4)) {
        auto h = interpolation::interp_poly(cfg, mu, interpolation::Normalization::unital);
        for (const auto& l : partitions::partitions_up_to(n, mu.size() + 2)) {
          bool small = l.size() <= mu.size(), outside = !partitions::contains(l, mu);
          if (!small && !outside) continue;
          ++evals;
          RF v = interpolation::eval_at(h, families::shift(cfg, l));
          RF want = l == mu ? RF(1L) : RF();
          if (v != want) o.fail(cfg.to_string() + " h_" + mu.to_string() + " at " + l.to_string() + " = " + v.to_string());
        }
      }
    }
  if (o.pass) o.detail = std::to_string(evals) + " evaluations";
  return o;
}

Outcome c6_pieri() {
  Outcome o;
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    for (const auto& mu : partitions::partitions_up_to(2, 3)) {
      if (!interpolation::pieri_check(cfg, mu)) o.fail("tableau route " + cfg.to_string() + " mu=" + mu.to_string());
      if (!oracle::pieri_from_solver(cfg, mu)) o.fail("solver route " + cfg.to_string() + " mu=" + mu.to_string());
    }
  }
  return o;
}

Outcome c7_binomial_formulas() {
  Outcome o;
  for (Family f : {Family::AJ, Family::AM}) {
    FamilyConfig cfg(f, 2);
    for (const auto& l : partitions::partitions_up_to(2, 4)) {
      if (!positivity::binomial_formula_holds(cfg, l)) o.fail("basis change " + cfg.to_string() + " " + l.to_string());
      if (!oracle::binomial_expansion_at_points(cfg, l)) o.fail("point evaluation " + cfg.to_string() + " " + l.to_string());
    }
  }
  return o;
}

Outcome c8_classical() {
  Outcome o;
  FamilyConfig cfg(Family::AJ, 1);
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= 10; ++m) {
      RF want(static_cast<long>(oracle::binomial(l, m)));
      if (coefficients::b_direct(cfg, P({l}), P({m})) != want || coefficients::b_weighted(cfg, P({l}), P({m})) != want)
        o.fail("C(" + std::to_string(l) + "," + std::to_string(m) + ")");
    }
  return o;
}

cli::RunConfig grid_config(const std::string& command, const std::string& target, int n, int d) {
  cli::RunConfig rc;
  rc.command = command;
  rc.target = target;
  rc.n = n;
  rc.max_size = d;
  return rc;
}

Outcome c9_monotonicity() {
  Outcome o;
  long records = 0, inconclusive = 0;
  for (auto [n, d] : kGrid) {
    auto r = cli::run_verify(grid_config("verify", "monotonicity", n, d));
    records += static_cast<long>(r.records.size());
    inconclusive += r.inconclusive;
    if (!r.failures.empty()) o.fail(r.failures.front());
    for (const auto& rec : r.records) {
      bool jack = rec.family == "AJ" || rec.family == "BJ";
      if (jack && rec.claim == "adjacent-b" && (rec.verdict != "Certified" || !rec.certificate || rec.certificate->empty()))
        o.fail("uncertified adjacent b " + rec.family + " " + rec.lambda.to_string() + " " + rec.mu.to_string());
    }
    // Adjacent coefficients and integral forms of the Jack families, rechecked here.
    for (Family f : {Family::AJ, Family::BJ}) {
      FamilyConfig cfg(f, n);
      for (const auto& l : partitions::partitions_up_to(n, d))
        for (const auto& m : partitions::lower_covers(l)) {
          RF av = coefficients::a_adjacent(cfg, l, m);
          auto v = exactalg::cone_check(av, families::cone_of(f));
          if (v.status != exactalg::VerdictStatus::Certified || !exactalg::recheck(av, families::cone_of(f), v))
            o.fail("a certificate " + cfg.to_string() + " " + l.to_string() + " " + m.to_string());
          RF A = families::c_product(cfg, m) * families::H_factor(cfg, m) * families::adjacent_b(cfg, l, m);
          if (A != coefficients::integral_forms(cfg, l, m).A || !oracle::nonneg_integer_polynomial(A))
            o.fail("A not in Z>=0[params] " + cfg.to_string() + " " + l.to_string() + " " + m.to_string());
        }
    }
    auto integ = cli::run_verify(grid_config("verify", "integrality", n, d));
    if (!integ.failures.empty()) o.fail(integ.failures.front());
  }
  if (o.pass) o.detail = std::to_string(records) + " records, none Refuted, " + std::to_string(inconclusive) + " Inconclusive (Macdonald cone)";
  return o;
}

Outcome c10_commutation() {
  Outcome o;
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    if (!coefficients::commutation_holds(cfg, 4)) o.fail("library [Z,B] " + cfg.to_string());
    if (!oracle::commutation(cfg, 4)) o.fail("oracle [Z,B] " + cfg.to_string());
    for (const auto& nu : partitions::partitions_up_to(2, 2)) {
      auto p = interpolation::interp_poly(cfg, nu, interpolation::Normalization::unital);
      if (!coefficients::cd_relation_holds(cfg, 4, p)) o.fail("library C=B^-1DB " + cfg.to_string() + " nu=" + nu.to_string());
      if (!oracle::cd_relation(cfg, 4, nu)) o.fail("oracle BC=DB " + cfg.to_string() + " nu=" + nu.to_string());
    }
  }
  return o;
}

Outcome c11_molev() {
  Outcome o;
  long pairs = 0;
  for (Family f : kAll) {
    FamilyConfig cfg(f, 2);
    auto all = partitions::partitions_up_to(2, 4);
    for (const auto& mu : all)
      for (const auto& nu : all) {
        ++pairs;
        auto c = positivity::molev_set_compare(cfg, mu, nu, mu.size() + 1);
        auto expected = oracle::molev_slice(2, mu, nu);
        std::vector<Partition> S, M;
        for (const auto& l : partitions::partitions_up_to(2, mu.size() + 1)) {
          if (!coefficients::lr_weighted(cfg, l, mu, nu).is_zero()) S.push_back(l);
          if (!partitions::enumerate_molev(l, mu, nu, 2).empty()) M.push_back(l);
        }
        if (!c.slice_holds || S != expected || M != expected || c.S != expected || c.M != expected)
          o.fail(cfg.to_string() + " mu=" + mu.to_string() + " nu=" + nu.to_string());
      }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (mu, nu) pairs; for nu = 0 the slice is {mu}";
  return o;
}

Outcome c12_conjectures() {
  Outcome o;
  long records = 0, certified = 0, inconclusive = 0;
  for (const char* name : {"int-J", "int-M", "lr-positivity", "lr-S"})
    for (auto [n, d] : kGrid) {
      auto r = cli::run_conjecture(grid_config("conjecture", name, n, d));
      records += static_cast<long>(r.records.size());
      certified += r.certified;
      inconclusive += r.inconclusive;
      for (const auto& rec : r.records)
        if (rec.verdict == "Refuted") {
          std::printf("  finding: %s\n", rec.to_json().dump().c_str());
          o.fail(std::string(name) + " has Refuted records");
        }
    }
  if (o.pass)
    o.detail = std::to_string(records) + " records: " + std::to_string(certified) + " Certified, " + std::to_string(inconclusive) + " Inconclusive, 0 Refuted";
  return o;
}

struct Criterion {
  int id;
  const char* what;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "AM (2,2)/(2,1): a and A match the worked example", kLimitExamples, c1_am_example},
      {2, "BM (2,2)/(2,1): A matches the nine-factor product", kLimitExamples, c2_bm_example},
      {3, "b_direct = b_weighted = b_recursive on the grid", kLimitThreeRoute, c3_three_routes},
      {4, "tableau h_mu = linear-solver h_mu, n <= 2, |mu| <= 4", kLimitOracle, c4_solver_oracle},
      {5, "interpolation and extra vanishing, n <= 2, |mu| <= 4", 0, c5_vanishing},
      {6, "Pieri identity, n = 2, |mu| <= 3", 0, c6_pieri},
      {7, "binomial formulas AJ and AM, n = 2, |lambda| <= 4", 0, c7_binomial_formulas},
      {8, "AJ n = 1 gives C(l, m), l, m <= 10", 0, c8_classical},
      {9, "monotonicity and positivity never Refuted; Jack adjacent data certified", 0, c9_monotonicity},
      {10, "[Z,B] = B[Z,A] and C = B^-1 D B on P_2^4, p = h_nu, |nu| <= 2", 0, c10_commutation},
      {11, "Molev slice, n = 2, |mu|, |nu| <= 4", 0, c11_molev},
      {12, "conjecture harnesses on the grid with zero Refuted", 0, c12_conjectures},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && s > c.limit) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit) + " s");
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, s, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed ? 1 : 0;
}
