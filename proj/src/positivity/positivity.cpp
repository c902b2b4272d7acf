#include "interpolatia/positivity/positivity.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "interpolatia/error.hpp"

namespace interpolatia::positivity {

using exactalg::Point;
using exactalg::Var;
using exactalg::VerdictStatus;
using families::Family;
using interpolation::SymPoly;

nlohmann::ordered_json EvidenceRecord::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  if (!family.empty()) j["family"] = family;
  j["n"] = n;
  j["lambda"] = lambda.to_string();
  j["mu"] = mu.to_string();
  if (nu) j["nu"] = nu->to_string();
  j["verdict"] = verdict;
  if (value) j["value"] = *value;
  if (certificate) j["certificate"] = *certificate;
  if (witness) j["witness"] = *witness;
  if (detail) j["detail"] = *detail;
  return j;
}

EvidenceRecord record_of(const std::string& claim, const FamilyConfig& cfg, const Partition& lambda, const Partition& mu,
                         const std::optional<Partition>& nu, const RF& value, const PositivityVerdict& v) {
  EvidenceRecord r;
  r.claim = claim;
  r.family = families::family_name(cfg.family);
  r.n = cfg.n;
  r.lambda = lambda;
  r.mu = mu;
  r.nu = nu;
  r.verdict = exactalg::status_name(v.status);
  r.value = value.to_string();
  if (v.status == VerdictStatus::Certified) {
    std::string text = v.certificate_text();
    r.certificate = text.empty() && value.is_zero() ? "zero" : text;
  }
  if (v.witness) r.witness = v.witness->to_string();
  return r;
}

std::optional<RF> DualityReport::coefficient_at(const Partition& nu) const {
  for (const auto& c : coefficients)
    if (c.nu == nu) return c.coefficient;
  return std::nullopt;
}

bool DualityReport::theorem_holds() const {
  if (contains) return refuted == 0;
  auto at_mu = coefficient_at(mu);
  return at_mu && *at_mu == RF(-1L);
}

std::vector<EvidenceRecord> DualityReport::records() const {
  std::vector<EvidenceRecord> out;
  for (const auto& c : coefficients) {
    EvidenceRecord r;
    r.claim = claim;
    r.family = family;
    r.n = n;
    r.lambda = lambda;
    r.mu = mu;
    r.nu = c.nu;
    r.verdict = exactalg::status_name(c.verdict.status);
    r.value = c.coefficient.to_string();
    if (c.verdict.status == VerdictStatus::Certified && (c.verdict.polya || c.verdict.atoms)) r.certificate = c.verdict.certificate_text();
    if (c.verdict.witness) r.witness = c.verdict.witness->to_string();
    r.detail = std::string(contains ? "lambda contains mu" : "lambda does not contain mu") + (note.empty() ? "" : "; " + note);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

void tally(DualityReport& r) {
  for (const auto& c : r.coefficients) {
    switch (c.verdict.status) {
      case VerdictStatus::Certified: ++r.certified; break;
      case VerdictStatus::Refuted: ++r.refuted; break;
      case VerdictStatus::Inconclusive: ++r.inconclusive; break;
    }
  }
}

// Partitions in P_n lying inside lambda or inside mu.
std::vector<Partition> below_either(int n, const Partition& lambda, const Partition& mu) {
  std::vector<Partition> out;
  for (const auto& nu : partitions::partitions_up_to(n, std::max(lambda.size(), mu.size())))
    if (partitions::contains(lambda, nu) || partitions::contains(mu, nu)) out.push_back(nu);
  return out;
}

PositivityVerdict verdict_for(const RF& c, exactalg::Cone cone, const ConeBudget& budget) {
  if (c.is_zero()) {
    PositivityVerdict v;
    v.status = VerdictStatus::Certified;
    return v;
  }
  return exactalg::cone_check(c, cone, budget);
}

PositivityVerdict sign_verdict(const Rational& c) {
  PositivityVerdict v;
  v.status = c >= 0 ? VerdictStatus::Certified : VerdictStatus::Refuted;
  return v;
}

DualityReport start(const std::string& claim, const std::string& family, int n, const Partition& lambda, const Partition& mu) {
  DualityReport r;
  r.claim = claim;
  r.family = family;
  r.n = n;
  r.lambda = lambda;
  r.mu = mu;
  r.contains = partitions::contains(lambda, mu);
  return r;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Expands prod_k sum_j step(factor_k)[j] B_j into products of basis elements
// keyed by their sorted non-zero indices (B_0 = 1).
using Step = std::function<std::vector<std::pair<int, Rational>>(int)>;
std::map<std::vector<int>, Rational> expand_products(const std::vector<int>& factors, const Step& step) {
  std::map<std::vector<int>, Rational> acc{{{}, Rational(1)}};
  for (int f : factors) {
    if (f == 0) continue;
    std::map<std::vector<int>, Rational> next;
    for (const auto& [key, w] : acc)
      for (const auto& [j, c] : step(f)) {
        if (c == 0) continue;
        auto k = key;
        if (j != 0) {
          k.push_back(j);
          std::sort(k.rbegin(), k.rend());
        }
        next[k] += w * c;
      }
    acc = std::move(next);
  }
  return acc;
}

Partition padded(const std::vector<int>& parts, int n) {
  std::vector<int> v = parts;
  v.resize(static_cast<std::size_t>(std::max<int>(n, static_cast<int>(v.size()))), 0);
  return Partition(v).resized(n);
}

DualityReport classical_duality(const std::string& claim, int n, const Partition& lambda, const Partition& mu,
                                 const std::function<std::map<Partition, Rational>(const Partition&)>& expand) {
  DualityReport r = start(claim, "", n, lambda, mu);
  auto el = expand(lambda), em = expand(mu);
  std::map<Partition, Rational> diff = el;
  for (const auto& [nu, c] : em) diff[nu] -= c;
  for (const auto& [nu, c] : diff) r.coefficients.push_back({nu, RF(c), sign_verdict(c)});
  tally(r);
  return r;
}

}  // namespace

DualityReport containment_duality(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const ConeBudget& budget) {
  DualityReport r = start("containment-duality", families::family_name(cfg.family), cfg.n, lambda, mu);
  for (const auto& nu : below_either(cfg.n, lambda, mu)) {
    RF c = coefficients::b_direct(cfg, lambda, nu) - coefficients::b_direct(cfg, mu, nu);
    r.coefficients.push_back({nu, c, verdict_for(c, families::cone_of(cfg.family), budget)});
  }
  tally(r);
  return r;
}

DualityReport powersum_duality(int n, const Partition& lambda, const Partition& mu) {
  for (const auto* p : {&lambda, &mu})
    if (p->part(1) > n) throw PartTooLarge("part " + std::to_string(p->part(1)) + " of " + p->to_string() + " exceeds n = " + std::to_string(n));
  auto expand = [n](const Partition& l) {
    auto raw = expand_products(l.parts(), [](int r) {
      std::vector<std::pair<int, Rational>> s;
      for (int t = 0; t <= r; ++t) s.emplace_back(t, binom(r, t));
      return s;
    });
    std::map<Partition, Rational> out;
    for (const auto& [k, c] : raw) out[padded(k, n)] += c;
    return out;
  };
  return classical_duality("powersum-duality", n, lambda, mu, expand);
}

DualityReport elementary_duality(int n, const Partition& lambda, const Partition& mu) {
  auto expand = [n](const Partition& l) {
    std::vector<int> conj = l.part(1) == 0 ? std::vector<int>{} : l.conjugate().parts();
    auto raw = expand_products(conj, [n](int k) {
      std::vector<std::pair<int, Rational>> s;
      for (int j = 0; j <= k; ++j) s.emplace_back(j, binom(n - j, k - j) * binom(n, j) / binom(n, k));
      return s;
    });
    std::map<Partition, Rational> out;
    for (const auto& [k, c] : raw) {
      Partition nu = k.empty() ? Partition::zero(n) : Partition(k).conjugate().resized(n);
      out[nu] += c;
    }
    return out;
  };
  DualityReport r = classical_duality("elementary-duality", n, lambda, mu, expand);
  r.note = "tau = infinity via the elementary basis";
  return r;
}

DualityReport specialization_duality(int n, const Partition& lambda, const Partition& mu, const Rational& tau0) {
  FamilyConfig cfg(Family::AJ, n);
  DualityReport r = start("specialization-duality", "AJ", n, lambda, mu);
  Point p;
  p.set(Var::tau, tau0);
  for (const auto& nu : below_either(n, lambda, mu)) {
    Rational c = (coefficients::b_direct(cfg, lambda, nu) - coefficients::b_direct(cfg, mu, nu)).eval(p);
    r.coefficients.push_back({nu, RF(c), sign_verdict(c)});
  }
  r.note = "tau = " + exactalg::rational_to_string(tau0) + " (rational tau only; infinity via the elementary basis)";
  tally(r);
  return r;
}

namespace {

RF value_at(const SymPoly& p, const families::ShiftedPoint& x) { return p.eval_at(x); }

families::ShiftedPoint ones(int n) { return families::ShiftedPoint(static_cast<std::size_t>(n), RF(1L)); }

}  // namespace

DualityReport macdonald_duality(int n, const Partition& lambda, const Partition& mu, const ConeBudget& budget) {
  FamilyConfig cfg(Family::AM, n);
  DualityReport r = start("macdonald-duality", "AM", n, lambda, mu);
  auto tdelta = families::shift(cfg, Partition::zero(n));
  auto normalized = [&](const Partition& l) {
    SymPoly p = interpolation::jack_macdonald(cfg, l);
    return p.scaled(value_at(p, tdelta).inverse());
  };
  auto expansion = interpolation::expand_in_monic_basis(normalized(lambda) - normalized(mu));
  auto range = below_either(n, lambda, mu);
  for (const auto& [nu, c] : expansion)
    if (std::find(range.begin(), range.end(), nu) == range.end())
      throw RouteMismatch("unexpected basis element " + nu.to_string() + " in the Macdonald expansion");
  for (const auto& nu : range) {
    auto it = expansion.find(nu);
    RF c = it == expansion.end() ? RF() : it->second * value_at(interpolation::jack_macdonald(cfg, nu), tdelta);
    RF expected = coefficients::b_direct(cfg, lambda, nu) - coefficients::b_direct(cfg, mu, nu);
    if (c != expected)
      throw RouteMismatch("Macdonald expansion at nu=" + nu.to_string() + ": " + c.to_string() + " vs b-table " + expected.to_string());
    r.coefficients.push_back({nu, c, verdict_for(c, exactalg::Cone::AM, budget)});
  }
  tally(r);
  return r;
}

bool binomial_formula_holds(const FamilyConfig& cfg, const Partition& lambda) {
  if (cfg.family != Family::AJ && cfg.family != Family::AM)
    throw std::invalid_argument("the binomial formula check covers AJ and AM");
  const bool jack = cfg.family == Family::AJ;
  auto base = jack ? ones(cfg.n) : families::shift(cfg, Partition::zero(cfg.n));
  SymPoly p = interpolation::jack_macdonald(cfg, lambda);
  std::map<Partition, RF> expansion;
  if (jack)
    expansion = interpolation::expand_in_ordinary_basis(p.shifted_by_ones().scaled(value_at(p, base).inverse()));
  else
    expansion = interpolation::expand_in_monic_basis(p.scaled(value_at(p, base).inverse()));
  auto range = partitions::partitions_up_to(cfg.n, lambda.size());
  for (const auto& [nu, c] : expansion)
    if (std::find(range.begin(), range.end(), nu) == range.end()) return false;
  for (const auto& nu : range) {
    auto it = expansion.find(nu);
    RF c = it == expansion.end() ? RF() : it->second * value_at(interpolation::jack_macdonald(cfg, nu), base);
    if (c != coefficients::b_direct(cfg, lambda, nu)) return false;
  }
  return true;
}

std::vector<EvidenceRecord> MolevComparison::records(const std::string& claim, const FamilyConfig& cfg, const Partition& mu,
                                                     const Partition& nu) const {
  auto in = [](const std::vector<Partition>& v, const Partition& x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  std::vector<EvidenceRecord> out;
  std::vector<Partition> all = S;
  for (const auto& x : M)
    if (!in(all, x)) all.push_back(x);
  std::sort(all.begin(), all.end());
  for (const auto& l : all) {
    EvidenceRecord r;
    r.claim = claim;
    r.family = families::family_name(cfg.family);
    r.n = cfg.n;
    r.lambda = l;
    r.mu = mu;
    r.nu = nu;
    bool s = in(S, l), m = in(M, l);
    r.verdict = s == m ? "Certified" : "Refuted";
    r.detail = std::string("in S: ") + (s ? "yes" : "no") + ", in M: " + (m ? "yes" : "no") +
               (l.size() <= mu.size() + 1 ? " (theorem slice)" : " (beyond the slice)");
    out.push_back(std::move(r));
  }
  return out;
}

MolevComparison molev_set_compare(const FamilyConfig& cfg, const Partition& mu, const Partition& nu, int d) {
  MolevComparison out;
  out.slice_holds = true;
  for (const auto& l : partitions::partitions_up_to(cfg.n, d)) {
    bool both = partitions::contains(l, mu) && partitions::contains(l, nu);
    bool s = !coefficients::lr_via_bbb(cfg, l, mu, nu).is_zero();
    bool m = !partitions::enumerate_molev(l, mu, nu, cfg.n).empty();
    if (s) out.S.push_back(l);
    if (m) out.M.push_back(l);
    if (both) out.contains_both.push_back(l);
    if (l.size() <= mu.size() + 1) {
      // h_0 = 1, so for nu = 0 only lambda = mu survives.
      bool expected = nu.is_zero() ? l == mu : both;
      if (s != expected || m != expected) out.slice_holds = false;
    } else if (s != m) {
      out.disagreements.push_back(l);
    }
  }
  return out;
}

SamplerReport evaluation_sampler(SamplerClaim claim, int n, const Partition& lambda, const Partition& mu,
                                 const std::vector<std::optional<Rational>>& taus, const std::vector<Rational>& grid) {
  SamplerReport r;
  r.claim = claim;
  r.lambda = lambda;
  r.mu = mu;
  r.hypothesis = claim == SamplerClaim::CGS ? lambda.size() == mu.size() && partitions::dominates(lambda, mu, false)
                                            : partitions::dominates(lambda, mu, true);
  FamilyConfig cfg(Family::AJ, n);
  SymPoly pl = interpolation::jack_macdonald(cfg, lambda), pm = interpolation::jack_macdonald(cfg, mu);
  RF nl = value_at(pl, ones(n)), nm = value_at(pm, ones(n));
  const std::string name = claim == SamplerClaim::CGS ? "jack-positivity-CGS" : "jack-positivity-KT";
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const int g = static_cast<int>(grid.size());
  if (g == 0) return r;
  while (true) {
    families::ShiftedPoint y;
    std::string xs = "(";
    for (int i = 0; i < n; ++i) {
      Rational v = grid[idx[i]];
      xs += (i ? "," : "") + exactalg::rational_to_string(v);
      if (claim == SamplerClaim::KT) v += 1;
      y.emplace_back(v);
    }
    xs += ")";
    RF d = value_at(pl, y) / nl - value_at(pm, y) / nm;
    for (const auto& tau : taus) {
      std::optional<Rational> val;
      if (tau) {
        Point p;
        p.set(Var::tau, *tau);
        try {
          val = d.eval(p);
        } catch (const PoleAtPoint&) {
          continue;
        }
      } else {
        auto lim = d.limit_at_infinity(exactalg::index_of(Var::tau));
        if (lim) val = lim->constant_value();
      }
      if (!val) continue;
      ++r.evaluated;
      if (*val < 0) {
        EvidenceRecord e;
        e.claim = name;
        e.family = "AJ";
        e.n = n;
        e.lambda = lambda;
        e.mu = mu;
        e.verdict = r.hypothesis ? "Refuted" : "Inconclusive";
        e.value = exactalg::rational_to_string(*val);
        e.witness = "x=" + xs + ", tau=" + (tau ? exactalg::rational_to_string(*tau) : std::string("infinity"));
        e.detail = r.hypothesis ? "exploratory sample" : "exploratory sample; dominance fails, so a negative value is expected";
        r.negatives.push_back(std::move(e));
      }
    }
    int k = 0;
    while (k < n && ++idx[k] == g) idx[k++] = 0;
    if (k == n) break;
  }
  return r;
}

}  // namespace interpolatia::positivity
