#include "interpolatia/coefficients/coefficients.hpp"

#include <sstream>
#include <stdexcept>

#include "interpolatia/error.hpp"
#include "interpolatia/util/pure_cache.hpp"

namespace interpolatia::coefficients {

using exactalg::MPoly;
using exactalg::Var;
using families::Family;
using partitions::Chain;

namespace {

struct Key {
  Family family;
  int n;
  int kind;
  std::vector<int> parts;  // lambda then mu, separated by -1
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = (static_cast<std::size_t>(k.family) * 7 + static_cast<std::size_t>(k.n)) * 5 + static_cast<std::size_t>(k.kind);
    for (int v : k.parts) h = h * 1000003 + static_cast<std::size_t>(v + 2);
    return h;
  }
};

enum CacheKind { kB = 0, kBRec = 1, kBInv = 2, kBInvRec = 3 };

Key key_of(const FamilyConfig& cfg, int kind, const Partition& l, const Partition& m) {
  Key k{cfg.family, cfg.n, kind, l.parts()};
  k.parts.push_back(-1);
  k.parts.insert(k.parts.end(), m.parts().begin(), m.parts().end());
  return k;
}

util::PureCache<Key, RF, KeyHash>& cache() {
  static util::PureCache<Key, RF, KeyHash> c;
  return c;
}

// ||x|| - ||y|| at shifted points, refusing a zero difference.
RF norm_gap(const FamilyConfig& cfg, const Partition& x, const Partition& y) {
  RF d = families::shifted_norm(cfg, x) - families::shifted_norm(cfg, y);
  if (d.is_zero())
    throw DegenerateNorm("equal shifted norms at " + x.to_string() + " and " + y.to_string() + " for " + cfg.to_string());
  return d;
}

// Partitions zeta with lambda >= zeta >= mu, in the total order.
std::vector<Partition> interval(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  std::vector<Partition> out;
  for (const auto& z : partitions::partitions_up_to(cfg.n, lambda.size()))
    if (partitions::contains(lambda, z) && partitions::contains(z, mu)) out.push_back(z);
  return out;
}

}  // namespace

RF b_direct_serial(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  return families::monic_value_serial(cfg, mu, families::shift(cfg, lambda)) / families::H_factor(cfg, mu);
}

RF b_direct_parallel(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  return families::monic_value_parallel(cfg, mu, families::shift(cfg, lambda)) / families::H_factor(cfg, mu);
}

RF b_direct(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  return cache().get_or_compute(key_of(cfg, kB, lambda, mu), [&] { return b_direct_serial(cfg, lambda, mu); });
}

RF a_adjacent(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  if (!partitions::covers(lambda, mu)) return RF();
  return families::adjacent_b(cfg, lambda, mu);
}

RF chain_weight(const FamilyConfig& cfg, const Chain& chain) {
  RF w(1L);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    w *= norm_gap(cfg, chain[i], chain[i + 1]) / norm_gap(cfg, chain.front(), chain[i + 1]);
  return w;
}

RF chain_product(const FamilyConfig& cfg, const Chain& chain) {
  RF p(1L);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) p *= families::adjacent_b(cfg, chain[i], chain[i + 1]);
  return p;
}

RF b_weighted(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  RF sum;
  for (const auto& chain : partitions::enumerate_chains(lambda, mu)) sum += chain_weight(cfg, chain) * chain_product(cfg, chain);
  return sum;
}

RF b_recursive(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return RF(1L);
  if (lambda.size() <= mu.size() || !partitions::contains(lambda, mu)) return RF();
  return cache().get_or_compute(key_of(cfg, kBRec, lambda, mu), [&] {
    RF sum;
    for (const auto& nu : partitions::upper_covers(mu)) {
      if (!partitions::contains(lambda, nu)) continue;
      sum += b_recursive(cfg, lambda, nu) * norm_gap(cfg, nu, mu) * families::adjacent_b(cfg, nu, mu);
    }
    return sum / norm_gap(cfg, lambda, mu);
  });
}

RF b_inverse(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  if (!partitions::contains(lambda, mu)) return RF();
  return cache().get_or_compute(key_of(cfg, kBInv, lambda, mu), [&] {
    RF sum;
    for (const auto& chain : partitions::enumerate_chains(lambda, mu)) {
      const std::size_t k = chain.size() - 1;
      RF w(k % 2 == 0 ? 1L : -1L);
      for (std::size_t i = 0; i < k; ++i) w *= norm_gap(cfg, chain[i + 1], chain[i]) / norm_gap(cfg, chain[k], chain[i]);
      sum += w * chain_product(cfg, chain);
    }
    return sum;
  });
}

RF b_inverse_recursive(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return RF(1L);
  if (lambda.size() <= mu.size() || !partitions::contains(lambda, mu)) return RF();
  return cache().get_or_compute(key_of(cfg, kBInvRec, lambda, mu), [&] {
    RF sum;
    for (const auto& nu : partitions::lower_covers(lambda)) {
      if (!partitions::contains(nu, mu)) continue;
      sum += families::adjacent_b(cfg, lambda, nu) * norm_gap(cfg, nu, lambda) * b_inverse_recursive(cfg, nu, mu);
    }
    return sum / norm_gap(cfg, lambda, mu);
  });
}

PointValues values_of(const FamilyConfig& cfg, const SymPoly& p) {
  return [cfg, p](const Partition& l) { return p.eval_at(families::shift(cfg, l)); };
}

RF structure_weighted(const FamilyConfig& cfg, const PointValues& p, const Partition& lambda, const Partition& mu) {
  RF sum;
  for (const auto& chain : partitions::enumerate_chains(lambda, mu)) {
    const std::size_t k = chain.size() - 1;
    RF steps(1L);
    for (std::size_t i = 0; i < k; ++i) steps *= norm_gap(cfg, chain[i], chain[i + 1]);
    RF w;
    for (std::size_t j = 0; j <= k; ++j) {
      RF pj = p(chain[j]);
      if (pj.is_zero()) continue;
      RF den(1L);
      for (std::size_t i = 0; i <= k; ++i)
        if (i != j) den *= norm_gap(cfg, chain[j], chain[i]);
      w += pj / den;
    }
    if (!w.is_zero()) sum += w * steps * chain_product(cfg, chain);
  }
  return sum;
}

RF structure_bbb(const FamilyConfig& cfg, const PointValues& p, const Partition& lambda, const Partition& mu) {
  RF sum;
  for (const auto& z : interval(cfg, lambda, mu)) {
    RF pz = p(z);
    if (pz.is_zero()) continue;
    sum += b_inverse(cfg, lambda, z) * b_direct(cfg, z, mu) * pz;
  }
  return sum;
}

RF structure_constants(const FamilyConfig& cfg, const SymPoly& p, const Partition& lambda, const Partition& mu) {
  auto values = values_of(cfg, p);
  RF w = structure_weighted(cfg, values, lambda, mu);
  RF t = structure_bbb(cfg, values, lambda, mu);
  if (w != t)
    throw RouteMismatch("structure constant at lambda=" + lambda.to_string() + ", mu=" + mu.to_string() + ": weighted " +
                        w.to_string() + " vs triple sum " + t.to_string());
  return w;
}

RF lr_weighted(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu) {
  return structure_weighted(cfg, [&](const Partition& z) { return b_direct(cfg, z, nu); }, lambda, mu);
}

RF lr_via_bbb(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu) {
  RF sum;
  for (const auto& z : interval(cfg, lambda, mu)) {
    if (!partitions::contains(z, nu)) continue;
    sum += b_inverse(cfg, lambda, z) * b_direct(cfg, z, mu) * b_direct(cfg, z, nu);
  }
  return sum;
}

RF lr_product_oracle(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu) {
  using interpolation::Normalization;
  SymPoly prod = interpolation::interp_poly(cfg, mu, Normalization::unital) * interpolation::interp_poly(cfg, nu, Normalization::unital);
  std::vector<Partition> below;
  for (const auto& z : partitions::partitions_up_to(cfg.n, lambda.size()))
    if (partitions::contains(lambda, z)) below.push_back(z);
  std::map<Partition, RF> c;
  for (const auto& z : below) {
    auto x = families::shift(cfg, z);
    RF v = prod.eval_at(x);
    for (const auto& [y, cy] : c)
      if (!cy.is_zero() && partitions::contains(z, y)) v -= cy * interpolation::interp_poly(cfg, y, Normalization::unital).eval_at(x);
    c[z] = v;
  }
  return c[lambda];
}

IntegralForms integral_forms(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu) {
  IntegralForms f;
  f.B = families::c_product(cfg, mu) * families::H_factor(cfg, mu) * b_direct(cfg, lambda, mu);
  if (partitions::covers(lambda, mu)) f.A = f.B;
  return f;
}

RF to_gamma_parameters(const RF& f) {
  std::array<std::optional<RF>, exactalg::kVarCount> v;
  RF g = RF::var(Var::gamma);
  v[exactalg::index_of(Var::q)] = RF(1L) + g;
  v[exactalg::index_of(Var::t)] = RF(1L) + g * RF::var(Var::tau);
  v[exactalg::index_of(Var::a)] = RF(1L) + g * RF::var(Var::alpha);
  return f.substitute(v);
}

namespace {

// +1 if every coefficient is a non-negative integer, -1 if every one is a
// non-positive integer, 0 otherwise.
int integer_sign(const MPoly& p) {
  bool pos = true, neg = true;
  for (const auto& t : p.terms()) {
    if (t.coef.get_den() != 1) return 0;
    if (t.coef < 0) pos = false;
    if (t.coef > 0) neg = false;
  }
  return pos ? 1 : neg ? -1 : 0;
}

}  // namespace

IntegralityVerdict integrality(const FamilyConfig& cfg, const RF& f) {
  IntegralityVerdict v;
  if (families::is_jack(cfg.family)) {
    v.reduced = f;
    if (!f.is_polynomial()) {
      v.detail = "not a polynomial";
      return v;
    }
    v.holds = integer_sign(f.num()) == 1;
    v.detail = v.holds ? "polynomial with non-negative integer coefficients" : "has a negative or non-integer coefficient";
    return v;
  }
  if (f.is_zero()) {
    v.holds = true;
    v.detail = "zero";
    return v;
  }
  const MPoly& den = f.den();
  if (!den.is_monomial()) {
    v.reduced = f;
    v.detail = "denominator is not a monomial";
    return v;
  }
  exactalg::Monomial top = f.num().min_exponents();
  exactalg::Monomial bottom = den.leading().mono;
  for (int i = 0; i < exactalg::kVarCount; ++i) {
    v.monomial.exp[i] = static_cast<std::int16_t>(top.exp[i] - bottom.exp[i]);
    v.monomial.deg += v.monomial.exp[i];
  }
  MPoly rest = f.num().div_monomial(top).scaled(exactalg::Rational(1) / den.leading().coef);
  RF g = to_gamma_parameters(RF(rest));
  v.reduced = g;
  if (!g.is_polynomial()) {
    v.detail = "not a polynomial after reparametrization";
    return v;
  }
  int s = integer_sign(g.num());
  v.holds = s != 0;
  v.sign = s == 0 ? 1 : s;
  if (s == -1) v.reduced = -g;
  v.detail = v.holds ? "non-negative integer coefficients in (g, tau, alpha) up to sign and a monomial in q, t, a"
                     : "mixed signs or non-integer coefficients in (g, tau, alpha)";
  return v;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::b: return "b";
    case Kind::b_inv: return "b_inv";
    case Kind::a: return "a";
    case Kind::lr: return "lr";
    case Kind::structure: return "structure";
  }
  return "?";
}

CoefficientTable table(const FamilyConfig& cfg, Kind kind, int d) {
  CoefficientTable t;
  t.family = cfg;
  t.kind = kind;
  auto all = partitions::partitions_up_to(cfg.n, d);
  for (const auto& l : all)
    for (const auto& m : all) {
      if (!partitions::contains(l, m)) continue;
      switch (kind) {
        case Kind::b: t.entries.push_back({l, m, std::nullopt, b_direct(cfg, l, m)}); break;
        case Kind::b_inv: t.entries.push_back({l, m, std::nullopt, b_inverse(cfg, l, m)}); break;
        case Kind::a:
          if (partitions::covers(l, m)) t.entries.push_back({l, m, std::nullopt, a_adjacent(cfg, l, m)});
          break;
        case Kind::lr:
          for (const auto& nu : all)
            if (partitions::contains(l, nu) && l.size() <= m.size() + nu.size())
              t.entries.push_back({l, m, nu, lr_via_bbb(cfg, l, m, nu)});
          break;
        case Kind::structure: throw std::invalid_argument("structure tables need a polynomial p");
      }
    }
  return t;
}

std::string CoefficientTable::to_csv() const {
  std::ostringstream out;
  out << "family,n,kind,lambda,mu,nu,value\n";
  for (const auto& e : entries) {
    out << families::family_name(family.family) << ',' << family.n << ',' << kind_name(kind) << ",\"" << e.lambda.to_string()
        << "\",\"" << e.mu.to_string() << "\"," << (e.nu ? "\"" + e.nu->to_string() + "\"" : "") << ",\"" << e.value.to_string()
        << "\"\n";
  }
  return out.str();
}

Matrix matrix_of(const std::vector<Partition>& index, const std::function<RF(const Partition&, const Partition&)>& entry) {
  Matrix m(index.size(), std::vector<RF>(index.size()));
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) m[i][j] = entry(index[i], index[j]);
  return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix r(n, std::vector<RF>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  Matrix r = x;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[i][j] -= y[i][j];
  return r;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

namespace {

Matrix diagonal(const std::vector<Partition>& index, const std::function<RF(const Partition&)>& d) {
  return matrix_of(index, [&](const Partition& l, const Partition& m) { return l == m ? d(l) : RF(); });
}

}  // namespace

bool commutation_holds(const FamilyConfig& cfg, int d) {
  auto index = partitions::partitions_up_to(cfg.n, d);
  Matrix Z = diagonal(index, [&](const Partition& l) { return families::shifted_norm(cfg, l); });
  Matrix B = matrix_of(index, [&](const Partition& l, const Partition& m) { return b_direct(cfg, l, m); });
  Matrix A = matrix_of(index, [&](const Partition& l, const Partition& m) { return a_adjacent(cfg, l, m); });
  Matrix Binv = matrix_of(index, [&](const Partition& l, const Partition& m) { return b_inverse(cfg, l, m); });
  Matrix ZA = commutator(Z, A);
  return commutator(Z, B) == B * ZA && commutator(Z, Binv) == Matrix(index.size(), std::vector<RF>(index.size())) - ZA * Binv;
}

bool cd_relation_holds(const FamilyConfig& cfg, int d, const SymPoly& p) {
  auto index = partitions::partitions_up_to(cfg.n, d);
  auto values = values_of(cfg, p);
  Matrix C = matrix_of(index, [&](const Partition& l, const Partition& m) { return structure_weighted(cfg, values, l, m); });
  Matrix D = diagonal(index, values);
  Matrix B = matrix_of(index, [&](const Partition& l, const Partition& m) { return b_direct(cfg, l, m); });
  Matrix Binv = matrix_of(index, [&](const Partition& l, const Partition& m) { return b_inverse(cfg, l, m); });
  return C == Binv * D * B;
}

}  // namespace interpolatia::coefficients
