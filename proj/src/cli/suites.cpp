#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>

#include "interpolatia/cli/cli.hpp"
#include "interpolatia/error.hpp"

namespace interpolatia::cli {

using coefficients::RF;
using exactalg::Rational;
using exactalg::VerdictStatus;
using families::Family;
using families::FamilyConfig;
using partitions::Partition;
using positivity::EvidenceRecord;

namespace {

const std::vector<Family> kAll = {Family::AJ, Family::BJ, Family::AM, Family::BM};

// What one work item contributes.
struct Outcome {
  std::vector<EvidenceRecord> records;
  std::vector<std::string> failures;
};
using Task = std::function<Outcome()>;

// Runs the tasks on the OpenMP pool and concatenates results in task order.
void fan_out(const std::vector<Task>& tasks, SuiteResult& out) {
  std::vector<Outcome> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
    try {
      results[i] = tasks[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& r : results) {
    for (auto& rec : r.records) out.records.push_back(std::move(rec));
    for (auto& f : r.failures) out.failures.push_back(std::move(f));
  }
  for (const auto& r : out.records) {
    if (r.verdict == "Certified") ++out.certified;
    else if (r.verdict == "Refuted") ++out.refuted;
    else ++out.inconclusive;
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

std::vector<Family> families_for(const RunConfig& rc, const std::vector<Family>& supported, const std::string& what) {
  if (rc.family.empty()) return supported;
  Family f;
  try {
    f = families::parse_family(rc.family);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown family '" + rc.family + "'");
  }
  for (Family s : supported)
    if (s == f) return {f};
  throw UsageError(what + " does not cover family " + rc.family);
}

void check_grid(const RunConfig& rc, bool symbolic) {
  require(rc.n >= 1 && rc.n <= (symbolic ? interpolation::kSymbolicMaxN : exactalg::kMaxXVars),
          "--n out of range for this suite");
  require(rc.max_size >= 0 && rc.max_size <= (symbolic ? interpolation::kSymbolicMaxSize : 8), "--max-size out of range for this suite");
}

exactalg::ConeBudget budget_of(const RunConfig& rc) {
  exactalg::ConeBudget b;
  b.polya_max = rc.budget_N;
  b.seed = rc.seed;
  return b;
}

EvidenceRecord make(const std::string& claim, const FamilyConfig& cfg, const Partition& l, const Partition& m,
                    std::optional<Partition> nu, const std::string& verdict, std::optional<std::string> detail = {}) {
  EvidenceRecord r;
  r.claim = claim;
  r.family = families::family_name(cfg.family);
  r.n = cfg.n;
  r.lambda = l;
  r.mu = m;
  r.nu = std::move(nu);
  r.verdict = verdict;
  r.detail = std::move(detail);
  return r;
}

std::string where(const FamilyConfig& cfg, const Partition& l, const Partition& m) {
  return cfg.to_string() + " lambda=" + l.to_string() + " mu=" + m.to_string();
}

positivity::PositivityVerdict check(const RF& c, Family f, const exactalg::ConeBudget& budget) {
  if (c.is_zero()) {
    positivity::PositivityVerdict v;
    v.status = VerdictStatus::Certified;
    return v;
  }
  return exactalg::cone_check(c, families::cone_of(f), budget);
}

// Builds a record from a cone verdict and notes a failure if it is Refuted.
void cone_record(Outcome& o, const std::string& claim, const FamilyConfig& cfg, const Partition& l, const Partition& m,
                 const std::optional<Partition>& nu, const RF& value, const positivity::PositivityVerdict& v, bool theorem) {
  o.records.push_back(positivity::record_of(claim, cfg, l, m, nu, value, v));
  if (theorem && v.status == VerdictStatus::Refuted)
    o.failures.push_back(claim + " " + where(cfg, l, m) + (nu ? " nu=" + nu->to_string() : ""));
}

std::string monomial_text(const exactalg::Monomial& m) {
  std::string s;
  for (exactalg::Var v : {exactalg::Var::q, exactalg::Var::t, exactalg::Var::a}) {
    int e = m.exp[exactalg::index_of(v)];
    if (e == 0) continue;
    if (!s.empty()) s += " ";
    s += exactalg::var_name(exactalg::index_of(v));
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string integrality_certificate(const coefficients::IntegralityVerdict& iv) {
  return "sign " + std::to_string(iv.sign) + "; monomial " + monomial_text(iv.monomial) + "; reduced " + iv.reduced.to_string();
}

bool integer_polynomial(const RF& f) {
  if (!f.is_polynomial()) return false;
  for (const auto& t : f.num().terms())
    if (t.coef.get_den() != 1) return false;
  return true;
}

// ---- verification suites ----

SuiteResult pieri(const RunConfig& rc) {
  check_grid(rc, true);
  require(rc.max_size < interpolation::kSymbolicMaxSize, "pieri needs |mu| + 1 within the symbolic cap");
  SuiteResult out;
  std::vector<Task> tasks;
  for (Family f : families_for(rc, kAll, "pieri")) {
    FamilyConfig cfg(f, rc.n);
    for (const auto& mu : partitions::partitions_up_to(rc.n, rc.max_size))
      tasks.push_back([cfg, mu] {
        Outcome o;
        bool ok = interpolation::pieri_check(cfg, mu);
        o.records.push_back(make("pieri", cfg, mu, mu, std::nullopt, ok ? "Certified" : "Refuted", "symbolic identity over the upper covers of mu"));
        if (!ok) o.failures.push_back("pieri " + cfg.to_string() + " mu=" + mu.to_string());
        return o;
      });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult three_route(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  for (Family f : families_for(rc, kAll, "three-route")) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& l : all)
      for (const auto& m : all) {
        if (!partitions::contains(l, m)) continue;
        tasks.push_back([cfg, l, m] {
          Outcome o;
          RF direct = coefficients::b_direct(cfg, l, m);
          RF weighted = coefficients::b_weighted(cfg, l, m);
          RF recursive = coefficients::b_recursive(cfg, l, m);
          std::string detail;
          if (weighted != direct) detail += "weighted route differs: " + weighted.to_string() + "; ";
          if (recursive != direct) detail += "recursive route differs: " + recursive.to_string() + "; ";
          auto r = make("three-route", cfg, l, m, std::nullopt, detail.empty() ? "Certified" : "Refuted",
                        detail.empty() ? "direct, weighted and recursive routes agree" : detail);
          r.value = direct.to_string();
          o.records.push_back(std::move(r));
          if (!detail.empty()) o.failures.push_back("three-route " + where(cfg, l, m));
          return o;
        });
      }
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult monotonicity(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  auto budget = budget_of(rc);
  for (Family f : families_for(rc, kAll, "monotonicity")) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& l : all)
      for (const auto& m : all)
        tasks.push_back([cfg, l, m, all, budget] {
          Outcome o;
          Family f = cfg.family;
          RF b = coefficients::b_direct(cfg, l, m);
          if (!partitions::contains(l, m)) {
            auto r = make("positivity", cfg, l, m, std::nullopt, b.is_zero() ? "Certified" : "Refuted", "lambda does not contain mu, so b vanishes");
            r.value = b.to_string();
            o.records.push_back(std::move(r));
            if (!b.is_zero()) o.failures.push_back("positivity " + where(cfg, l, m));
            return o;
          }
          auto vb = check(b, f, budget);
          if (b.is_zero()) vb.status = VerdictStatus::Refuted;
          cone_record(o, "positivity", cfg, l, m, std::nullopt, b, vb, true);
          for (const auto& nu : all) {
            if (!partitions::contains(l, nu)) continue;
            RF d = coefficients::b_direct(cfg, l, nu) - coefficients::b_direct(cfg, m, nu);
            cone_record(o, "monotonicity", cfg, l, m, nu, d, check(d, f, budget), true);
          }
          if (partitions::covers(l, m)) {
            RF a = coefficients::a_adjacent(cfg, l, m);
            cone_record(o, "adjacent-b", cfg, l, m, std::nullopt, a, check(a, f, budget), true);
            for (const auto& nu : all) {
              if (!partitions::contains(l, nu)) continue;
              RF c = coefficients::lr_weighted(cfg, l, m, nu);
              cone_record(o, "adjacent-lr", cfg, l, m, nu, c, check(c, f, budget), true);
            }
          }
          return o;
        });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult duality(const RunConfig& rc) {
  check_grid(rc, true);
  SuiteResult out;
  std::vector<Task> tasks;
  auto budget = budget_of(rc);
  auto all = partitions::partitions_up_to(rc.n, rc.max_size);
  const int n = rc.n;
  for (Family f : families_for(rc, {Family::AJ, Family::AM}, "duality")) {
    FamilyConfig cfg(f, n);
    for (const auto& l : all)
      for (const auto& m : all)
        tasks.push_back([=] {
          Outcome o;
          auto take = [&](const positivity::DualityReport& r, bool must_hold) {
            for (auto& rec : r.records()) o.records.push_back(std::move(rec));
            if (must_hold && !r.theorem_holds()) o.failures.push_back(r.claim + " " + where(cfg, l, m));
          };
          if (f == Family::AM) {
            take(positivity::macdonald_duality(n, l, m, budget), true);
            return o;
          }
          take(positivity::containment_duality(cfg, l, m, budget), true);
          if (l.part(1) <= n && m.part(1) <= n) take(positivity::powersum_duality(n, l, m), true);
          take(positivity::elementary_duality(n, l, m), true);
          if (partitions::contains(l, m))
            for (int tau0 : {0, 1}) {
              auto r = positivity::specialization_duality(n, l, m, tau0);
              for (auto& rec : r.records()) o.records.push_back(std::move(rec));
              if (r.refuted) o.failures.push_back(r.claim + " tau=" + std::to_string(tau0) + " " + where(cfg, l, m));
            }
          return o;
        });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult molev(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  for (Family f : families_for(rc, kAll, "molev")) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& mu : all)
      for (const auto& nu : all)
        tasks.push_back([cfg, mu, nu] {
          Outcome o;
          auto c = positivity::molev_set_compare(cfg, mu, nu, mu.size() + 1);
          o.records = c.records("molev-slice", cfg, mu, nu);
          if (!c.slice_holds) o.failures.push_back("molev-slice " + cfg.to_string() + " mu=" + mu.to_string() + " nu=" + nu.to_string());
          return o;
        });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult integrality(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  for (Family f : families_for(rc, kAll, "integrality")) {
    FamilyConfig cfg(f, rc.n);
    for (const auto& l : partitions::partitions_up_to(rc.n, rc.max_size))
      for (const auto& m : partitions::lower_covers(l))
        tasks.push_back([cfg, l, m] {
          Outcome o;
          RF A = coefficients::integral_forms(cfg, l, m).A;
          auto iv = coefficients::integrality(cfg, A);
          auto r = make("a-integrality", cfg, l, m, std::nullopt, iv.holds ? "Certified" : "Refuted", iv.detail);
          r.value = A.to_string();
          if (iv.holds) r.certificate = integrality_certificate(iv);
          o.records.push_back(std::move(r));
          if (!iv.holds) o.failures.push_back("a-integrality " + where(cfg, l, m));
          return o;
        });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult commutation(const RunConfig& rc) {
  check_grid(rc, true);
  SuiteResult out;
  std::vector<Task> tasks;
  Partition zero = Partition::zero(rc.n);
  const int d = rc.max_size;
  for (Family f : families_for(rc, kAll, "commutation")) {
    FamilyConfig cfg(f, rc.n);
    std::string block = "block P_" + std::to_string(rc.n) + "^{<=" + std::to_string(d) + "}";
    tasks.push_back([=] {
      Outcome o;
      bool ok = coefficients::commutation_holds(cfg, d);
      o.records.push_back(make("commutation", cfg, zero, zero, std::nullopt, ok ? "Certified" : "Refuted", "[Z,B] = B[Z,A] and [Z,B^-1] = -[Z,A]B^-1 on the " + block));
      if (!ok) o.failures.push_back("commutation " + cfg.to_string());
      return o;
    });
    for (const auto& nu : partitions::partitions_up_to(rc.n, 2))
      tasks.push_back([=] {
        Outcome o;
        auto p = interpolation::interp_poly(cfg, nu, interpolation::Normalization::unital);
        bool ok = coefficients::cd_relation_holds(cfg, d, p);
        o.records.push_back(make("cd-relation", cfg, zero, zero, nu, ok ? "Certified" : "Refuted", "C = B^-1 D B for p = h_nu on the " + block));
        if (!ok) o.failures.push_back("cd-relation " + cfg.to_string() + " nu=" + nu.to_string());
        return o;
      });
  }
  fan_out(tasks, out);
  return out;
}

// ---- conjecture harnesses ----

SuiteResult int_conjecture(const RunConfig& rc, bool jack) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  auto fams = jack ? std::vector<Family>{Family::AJ, Family::BJ} : std::vector<Family>{Family::AM, Family::BM};
  const std::string claim = jack ? "int-J" : "int-M";
  for (Family f : families_for(rc, fams, claim)) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& l : all)
      for (const auto& m : all) {
        if (l == m || !partitions::contains(l, m)) continue;
        tasks.push_back([=] {
          Outcome o;
          RF B = coefficients::integral_forms(cfg, l, m).B;
          auto iv = coefficients::integrality(cfg, B);
          std::string verdict = "Certified";
          if (!iv.holds) {
            // Sign changes in (g, tau, alpha) might still disappear for another
            // power of q, t, a; a non-integer or non-polynomial value cannot.
            verdict = !jack && integer_polynomial(iv.reduced) ? "Inconclusive" : "Refuted";
          }
          auto r = make(claim, cfg, l, m, std::nullopt, verdict,
                        std::string(partitions::covers(l, m) ? "adjacent; " : "non-adjacent; ") + iv.detail);
          r.value = B.to_string();
          if (iv.holds) r.certificate = integrality_certificate(iv);
          else r.witness = "reduced " + iv.reduced.to_string();
          o.records.push_back(std::move(r));
          return o;
        });
      }
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult lr_positivity(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  auto budget = budget_of(rc);
  for (Family f : families_for(rc, kAll, "lr-positivity")) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& l : all)
      for (const auto& m : all) {
        if (!partitions::contains(l, m)) continue;
        tasks.push_back([=] {
          Outcome o;
          // c is symmetric in mu and nu, so nu runs over mu <= nu only.
          for (const auto& nu : all) {
            if (nu < m || !partitions::contains(l, nu) || l.size() > m.size() + nu.size()) continue;
            RF c = coefficients::lr_weighted(cfg, l, m, nu);
            auto r = positivity::record_of("lr-positivity", cfg, l, m, nu, c, check(c, f, budget));
            r.detail = l.size() - m.size() <= 1 || l.size() - nu.size() <= 1 ? "adjacent" : "general";
            o.records.push_back(std::move(r));
          }
          return o;
        });
      }
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult lr_s(const RunConfig& rc) {
  check_grid(rc, false);
  SuiteResult out;
  std::vector<Task> tasks;
  for (Family f : families_for(rc, kAll, "lr-S")) {
    FamilyConfig cfg(f, rc.n);
    auto all = partitions::partitions_up_to(rc.n, rc.max_size);
    for (const auto& mu : all)
      for (const auto& nu : all)
        tasks.push_back([=] {
          Outcome o;
          o.records = positivity::molev_set_compare(cfg, mu, nu, rc.max_size).records("lr-S", cfg, mu, nu);
          return o;
        });
  }
  fan_out(tasks, out);
  return out;
}

SuiteResult jack_positivity(const RunConfig& rc) {
  check_grid(rc, true);
  families_for(rc, {Family::AJ}, "jack-positivity");
  SuiteResult out;
  std::mt19937_64 rng(rc.seed);
  std::vector<Rational> grid = {0, 1};
  for (int i = 0; i < 2; ++i) grid.push_back(Rational(static_cast<long>(rng() % 13), static_cast<long>(1 + rng() % 4)));
  for (auto& g : grid) g.canonicalize();
  std::vector<std::optional<Rational>> taus = {Rational(0), Rational(1, 2), Rational(1), Rational(2), std::nullopt};
  std::vector<Task> tasks;
  FamilyConfig cfg(Family::AJ, rc.n);
  auto all = partitions::partitions_up_to(rc.n, rc.max_size);
  for (const auto& l : all)
    for (const auto& m : all) {
      if (l == m) continue;
      for (auto claim : {positivity::SamplerClaim::CGS, positivity::SamplerClaim::KT}) {
        if (claim == positivity::SamplerClaim::CGS && l.size() != m.size()) continue;
        tasks.push_back([=] {
          Outcome o;
          auto s = positivity::evaluation_sampler(claim, rc.n, l, m, taus, grid);
          std::string name = claim == positivity::SamplerClaim::CGS ? "jack-positivity-CGS" : "jack-positivity-KT";
          if (s.hypothesis && !s.negatives.empty()) {
            o.records.push_back(s.negatives.front());
            return o;
          }
          auto r = make(name, cfg, l, m, std::nullopt, "Inconclusive",
                        std::string(s.hypothesis ? "dominance holds" : "dominance fails") + "; " +
                            std::to_string(s.negatives.size()) + " negative of " + std::to_string(s.evaluated) + " exact samples (exploratory)");
          if (!s.negatives.empty()) r.witness = s.negatives.front().witness;
          o.records.push_back(std::move(r));
          return o;
        });
      }
    }
  fan_out(tasks, out);
  return out;
}

std::vector<std::string> names_of(const SuiteResult& r) {
  std::vector<std::string> out;
  for (const auto& rec : r.records)
    if (!rec.family.empty() && std::find(out.begin(), out.end(), rec.family) == out.end()) out.push_back(rec.family);
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s = {"pieri", "three-route", "monotonicity", "duality", "molev", "integrality", "commutation"};
  return s;
}

const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> s = {"int-J", "int-M", "lr-positivity", "lr-S", "jack-positivity"};
  return s;
}

SuiteResult run_verify(const RunConfig& rc) {
  static const std::map<std::string, SuiteResult (*)(const RunConfig&)> table = {
      {"pieri", pieri}, {"three-route", three_route}, {"monotonicity", monotonicity}, {"duality", duality},
      {"molev", molev}, {"integrality", integrality}, {"commutation", commutation}};
  auto it = table.find(rc.target);
  if (it == table.end()) throw UsageError("unknown suite '" + rc.target + "'");
  SuiteResult r = it->second(rc);
  r.name = rc.target;
  r.families = names_of(r);
  return r;
}

SuiteResult run_conjecture(const RunConfig& rc) {
  SuiteResult r;
  if (rc.target == "int-J") r = int_conjecture(rc, true);
  else if (rc.target == "int-M") r = int_conjecture(rc, false);
  else if (rc.target == "lr-positivity") r = lr_positivity(rc);
  else if (rc.target == "lr-S") r = lr_s(rc);
  else if (rc.target == "jack-positivity") r = jack_positivity(rc);
  else throw UsageError("unknown conjecture '" + rc.target + "'");
  r.name = rc.target;
  r.families = names_of(r);
  return r;
}

}  // namespace interpolatia::cli
