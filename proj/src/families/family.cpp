#include "interpolatia/families/family.hpp"

#include <omp.h>

#include <stdexcept>

#include "interpolatia/error.hpp"
#include "interpolatia/util/pure_cache.hpp"

namespace interpolatia::families {

using exactalg::MPoly;
using exactalg::Monomial;
using exactalg::Var;
using exactalg::index_of;

std::string family_name(Family f) {
  switch (f) {
    case Family::AJ: return "AJ";
    case Family::BJ: return "BJ";
    case Family::AM: return "AM";
    case Family::BM: return "BM";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "AJ") return Family::AJ;
  if (s == "BJ") return Family::BJ;
  if (s == "AM") return Family::AM;
  if (s == "BM") return Family::BM;
  throw std::invalid_argument("unknown family '" + s + "' (expected AJ, BJ, AM or BM)");
}

exactalg::Cone cone_of(Family f) {
  switch (f) {
    case Family::AJ: return exactalg::Cone::AJ;
    case Family::BJ: return exactalg::Cone::BJ;
    case Family::AM: return exactalg::Cone::AM;
    case Family::BM: return exactalg::Cone::BM;
  }
  return exactalg::Cone::AJ;
}

FamilyConfig::FamilyConfig(Family f, int vars) : family(f), n(vars) {
  if (vars < 1 || vars > exactalg::kMaxXVars)
    throw std::invalid_argument("n must lie in 1.." + std::to_string(exactalg::kMaxXVars));
}

std::string FamilyConfig::to_string() const { return family_name(family) + "(n=" + std::to_string(n) + ")"; }

namespace {

RF tau() { return RF::var(Var::tau); }
RF alpha() { return RF::var(Var::alpha); }

/// q^i t^j a^k as a rational function; negative exponents allowed.
RF qta(int i, int j, int k) {
  Monomial num, den;
  auto put = [&](Var v, int e) {
    Monomial m = Monomial::of(index_of(v), e < 0 ? -e : e);
    if (e > 0) num = num * m;
    if (e < 0) den = den * m;
  };
  put(Var::q, i);
  put(Var::t, j);
  put(Var::a, k);
  if (den.is_one()) return RF(MPoly::term(num, 1));
  return RF::make(MPoly::term(num, 1), MPoly::term(den, 1));
}

struct StripKey {
  bool jack;
  std::vector<int> mu, nu;
  bool operator==(const StripKey&) const = default;
};

struct StripKeyHash {
  std::size_t operator()(const StripKey& k) const {
    std::size_t h = k.jack ? 7 : 3;
    for (int v : k.mu) h = h * 131 + static_cast<std::size_t>(v) + 1;
    h = h * 137 + 5;
    for (int v : k.nu) h = h * 131 + static_cast<std::size_t>(v) + 1;
    return h;
  }
};

std::vector<int> stripped(const Partition& p) {
  std::vector<int> v = p.parts();
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

util::PureCache<StripKey, RF, StripKeyHash>& strip_cache() {
  static util::PureCache<StripKey, RF, StripKeyHash> cache;
  return cache;
}

struct NormKey {
  Family family;
  int n;
  std::vector<int> parts;
  bool operator==(const NormKey&) const = default;
};

struct NormKeyHash {
  std::size_t operator()(const NormKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.family) * 31 + static_cast<std::size_t>(k.n);
    for (int v : k.parts) h = h * 131 + static_cast<std::size_t>(v) + 1;
    return h;
  }
};

util::PureCache<NormKey, RF, NormKeyHash>& norm_cache() {
  static util::PureCache<NormKey, RF, NormKeyHash> cache;
  return cache;
}

// Hook ratio b = c / c' of the Jack or Macdonald kind.
RF hook_ratio(bool jack, const Partition& lambda, const Box& s) {
  auto al = partitions::arm_leg(lambda, s);
  if (jack) {
    RF c = RF(static_cast<long>(al.arm)) + tau() * RF(static_cast<long>(al.leg + 1));
    RF cp = RF(static_cast<long>(al.arm + 1)) + tau() * RF(static_cast<long>(al.leg));
    return c / cp;
  }
  RF c = RF(1L) - qta(al.arm, al.leg + 1, 0);
  RF cp = RF(1L) - qta(al.arm + 1, al.leg, 0);
  return c / cp;
}

}  // namespace

ShiftedPoint shift(const FamilyConfig& cfg, const Partition& lambda) {
  ShiftedPoint p;
  p.reserve(static_cast<std::size_t>(cfg.n));
  for (int i = 1; i <= cfg.n; ++i) {
    long li = lambda.part(i);
    long off = cfg.n - i;
    switch (cfg.family) {
      case Family::AJ: p.push_back(RF(li) + tau() * RF(off)); break;
      case Family::BJ: p.push_back(RF(li) + tau() * RF(off) + alpha()); break;
      case Family::AM: p.push_back(qta(static_cast<int>(li), static_cast<int>(off), 0)); break;
      case Family::BM: p.push_back(qta(static_cast<int>(li), static_cast<int>(off), 1)); break;
    }
  }
  return p;
}

RF norm_at(const FamilyConfig& cfg, const ShiftedPoint& p) {
  RF s;
  for (const RF& x : p) {
    switch (cfg.family) {
      case Family::AJ:
      case Family::AM: s += x; break;
      case Family::BJ: s += x * x; break;
      case Family::BM: s += x + x.inverse(); break;
    }
  }
  return s;
}

RF shifted_norm(const FamilyConfig& cfg, const Partition& lambda) {
  return norm_cache().get_or_compute(NormKey{cfg.family, cfg.n, lambda.parts()},
                                     [&] { return norm_at(cfg, shift(cfg, lambda)); });
}

Hooks hooklengths(const FamilyConfig& cfg, const Partition& lambda, const Box& s) {
  auto al = partitions::arm_leg(lambda, s);
  Hooks h;
  int dq = al.arm + 2 * al.coarm + 1;
  int dt = 2 * cfg.n - (al.leg + 2 * al.coleg + 2);
  if (is_jack(cfg.family)) {
    h.c = RF(static_cast<long>(al.arm)) + tau() * RF(static_cast<long>(al.leg + 1));
    h.c_prime = RF(static_cast<long>(al.arm + 1)) + tau() * RF(static_cast<long>(al.leg));
    if (cfg.family == Family::BJ) h.d = RF(static_cast<long>(dq)) + tau() * RF(static_cast<long>(dt)) + alpha() * RF(2L);
  } else {
    h.c = RF(1L) - qta(al.arm, al.leg + 1, 0);
    h.c_prime = RF(1L) - qta(al.arm + 1, al.leg, 0);
    if (cfg.family == Family::BM) h.d = RF(1L) - qta(dq, dt, 2);
  }
  return h;
}

RF psi_strip(const FamilyConfig& cfg, const Partition& mu, const Partition& nu) {
  bool jack = is_jack(cfg.family);
  return strip_cache().get_or_compute(StripKey{jack, stripped(mu), stripped(nu)}, [&] {
    auto sets = partitions::strip_sets(mu, nu);
    RF r(1L);
    for (const Box& s : sets.rows_not_cols) r *= hook_ratio(jack, nu, s) / hook_ratio(jack, mu, s);
    return r;
  });
}

RF psi(const FamilyConfig& cfg, const ReverseTableau& T) {
  auto lv = T.levels(cfg.n);
  RF r(1L);
  for (int i = 1; i <= cfg.n; ++i) r *= psi_strip(cfg, lv[i - 1], lv[i]);
  return r;
}

RF c_product(const FamilyConfig& cfg, const Partition& lambda) {
  RF r(1L);
  for (const Box& s : lambda.boxes()) r *= hooklengths(cfg, lambda, s).c;
  return r;
}

RF c_prime_product(const FamilyConfig& cfg, const Partition& lambda) {
  RF r(1L);
  for (const Box& s : lambda.boxes()) r *= hooklengths(cfg, lambda, s).c_prime;
  return r;
}

RF d_product(const FamilyConfig& cfg, const Partition& lambda) {
  if (!is_bc(cfg.family)) throw std::logic_error("d-lengths exist only for BJ and BM");
  RF r(1L);
  for (const Box& s : lambda.boxes()) r *= *hooklengths(cfg, lambda, s).d;
  return r;
}

RF H_factor(const FamilyConfig& cfg, const Partition& lambda) {
  int size = lambda.size();
  int nl = static_cast<int>(partitions::n_stat(lambda));
  int nlc = static_cast<int>(partitions::n_stat(lambda.conjugate()));
  RF cp = c_prime_product(cfg, lambda);
  switch (cfg.family) {
    case Family::AJ: return cp;
    case Family::BJ: return cp * d_product(cfg, lambda);
    case Family::AM: {
      RF sign(size % 2 == 0 ? 1L : -1L);
      return sign * qta(nlc, (cfg.n - 1) * size - 2 * nl, 0) * cp;
    }
    case Family::BM:
      return qta(-size - 2 * nlc, -(cfg.n - 1) * size + nl, -size) * cp * d_product(cfg, lambda);
  }
  return cp;
}

RF adjacent_b(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  Box s0 = partitions::cover_box(lambda, mu);
  RF r(1L);
  for (const Box& s : lambda.boxes()) {
    bool same_col = s.col == s0.col, same_row = s.row == s0.row;
    if (same_col == same_row) continue;
    Hooks hl = hooklengths(cfg, lambda, s), hm = hooklengths(cfg, mu, s);
    r *= same_col ? hl.c / hm.c : hl.c_prime / hm.c_prime;
    if (hl.d) r *= *hl.d / *hm.d;
  }
  if (cfg.family == Family::AM) r *= qta(0, -(s0.row - 1), 0);
  if (cfg.family == Family::BM) r *= qta(-(s0.col - 1), 0, 0);
  return r;
}

RF box_constant(const FamilyConfig& cfg, const Partition& shape, const Box& s, int v) {
  auto al = partitions::arm_leg(shape, s);
  long e = cfg.n - v - al.coleg;
  switch (cfg.family) {
    case Family::AJ: return RF(static_cast<long>(al.coarm)) + tau() * RF(e);
    case Family::BJ: return RF(static_cast<long>(al.coarm)) + tau() * RF(e) + alpha();
    case Family::AM: return qta(al.coarm, static_cast<int>(e), 0);
    case Family::BM: return qta(al.coarm, static_cast<int>(e), 1);
  }
  return RF();
}

RF box_factor(const FamilyConfig& cfg, const RF& xv, const RF& constant) {
  switch (cfg.family) {
    case Family::AJ:
    case Family::AM: return xv - constant;
    case Family::BJ: return xv * xv - constant * constant;
    case Family::BM: {
      RF prod = xv * constant;
      return (xv - constant) * (prod - RF(1L)) / prod;
    }
  }
  return RF();
}

namespace {

// table[k][v - 1] = factor at the k-th box (row-major) when T = v.
std::vector<std::vector<RF>> factor_table(const FamilyConfig& cfg, const Partition& mu, const ShiftedPoint& x) {
  std::vector<std::vector<RF>> table;
  for (const Box& s : mu.boxes()) {
    std::vector<RF> row;
    for (int v = 1; v <= cfg.n; ++v) row.push_back(box_factor(cfg, x[v - 1], box_constant(cfg, mu, s, v)));
    table.push_back(std::move(row));
  }
  return table;
}

RF tableau_term(const FamilyConfig& cfg, const ReverseTableau& T, const std::vector<std::vector<RF>>& table) {
  RF prod(1L);
  std::size_t k = 0;
  for (const auto& row : T.rows())
    for (int v : row) {
      prod *= table[k++][v - 1];
      if (prod.is_zero()) return prod;
    }
  return prod * psi(cfg, T);
}

}  // namespace

RF monic_value_serial(const FamilyConfig& cfg, const Partition& mu, const ShiftedPoint& x) {
  auto table = factor_table(cfg, mu, x);
  RF sum;
  partitions::for_each_RT(mu, cfg.n, [&](const ReverseTableau& T) { sum += tableau_term(cfg, T, table); });
  return sum;
}

RF monic_value_parallel(const FamilyConfig& cfg, const Partition& mu, const ShiftedPoint& x) {
  auto table = factor_table(cfg, mu, x);
  auto tableaux = partitions::enumerate_RT(mu, cfg.n);
  constexpr std::size_t kChunk = 16;
  std::size_t chunks = (tableaux.size() + kChunk - 1) / kChunk;
  std::vector<RF> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    RF sum;
    std::size_t end = std::min(tableaux.size(), (c + 1) * kChunk);
    for (std::size_t k = c * kChunk; k < end; ++k) sum += tableau_term(cfg, tableaux[k], table);
    partial[c] = std::move(sum);
  }
  RF sum;
  for (const RF& p : partial) sum += p;
  return sum;
}

}  // namespace interpolatia::families
