#include "interpolatia/interpolation/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "interpolatia/error.hpp"
#include "interpolatia/util/pure_cache.hpp"

namespace interpolatia::interpolation {

using exactalg::MPoly;
using exactalg::Monomial;
using exactalg::Term;
using families::Family;

std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::monic: return "monic";
    case Normalization::unital: return "unital";
    case Normalization::integral: return "integral";
  }
  return "?";
}

Normalization parse_normalization(const std::string& s) {
  if (s == "monic") return Normalization::monic;
  if (s == "unital") return Normalization::unital;
  if (s == "integral") return Normalization::integral;
  throw std::invalid_argument("unknown normalization '" + s + "' (expected monic, unital or integral)");
}

namespace {

struct PolyKey {
  Family family;
  int n;
  std::vector<int> parts;
  bool operator==(const PolyKey&) const = default;
};

struct PolyKeyHash {
  std::size_t operator()(const PolyKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.family) * 31 + static_cast<std::size_t>(k.n);
    for (int v : k.parts) h = h * 131 + static_cast<std::size_t>(v) + 1;
    return h;
  }
};

util::PureCache<PolyKey, SymPoly, PolyKeyHash>& ordinary_cache() {
  static util::PureCache<PolyKey, SymPoly, PolyKeyHash> c;
  return c;
}

util::PureCache<PolyKey, SymPoly, PolyKeyHash>& monic_cache() {
  static util::PureCache<PolyKey, SymPoly, PolyKeyHash> c;
  return c;
}

void check_caps(const FamilyConfig& cfg, const Partition& lambda) {
  if (cfg.n > kSymbolicMaxN || lambda.size() > kSymbolicMaxSize)
    throw CapExceeded("symbolic polynomials are limited to n <= " + std::to_string(kSymbolicMaxN) + " and |lambda| <= " +
                      std::to_string(kSymbolicMaxSize));
}

MPoly xvar(int v, int power = 1) { return MPoly::var_index(exactalg::x_index(v), power); }

XExp x_part(const Monomial& m) {
  XExp e{};
  for (int i = 0; i < exactalg::kMaxXVars; ++i) e[i] = m.exp[exactalg::kParamCount + i];
  return e;
}

// Adds scale * p to acc, reading the x-variables of p as SymPoly exponents.
void add_split(SymPoly& acc, const MPoly& p, const RF& scale) {
  std::map<XExp, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Term s = t;
    XExp e = x_part(t.mono);
    for (int i = 0; i < exactalg::kMaxXVars; ++i) {
      s.mono.deg -= s.mono.exp[exactalg::kParamCount + i];
      s.mono.exp[exactalg::kParamCount + i] = 0;
    }
    groups[e].push_back(std::move(s));
  }
  for (auto& [e, terms] : groups) acc.add_term(e, scale * RF(MPoly::from_terms(std::move(terms))));
}

SymPoly compute_monic(const FamilyConfig& cfg, const Partition& mu) {
  auto boxes = mu.boxes();
  std::vector<std::vector<MPoly>> factor(boxes.size());
  std::vector<std::vector<RF>> denom(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k)
    for (int v = 1; v <= cfg.n; ++v) {
      RF K = families::box_constant(cfg, mu, boxes[k], v);
      const MPoly& kp = K.num();
      switch (cfg.family) {
        case Family::AJ:
        case Family::AM:
          factor[k].push_back(xvar(v) - kp);
          denom[k].push_back(RF(1L));
          break;
        case Family::BJ:
          factor[k].push_back(xvar(v) - kp * kp);
          denom[k].push_back(RF(1L));
          break;
        case Family::BM:
          factor[k].push_back(kp * xvar(v) + kp * xvar(v, -1) - kp * kp - MPoly(1L));
          denom[k].push_back(K);
          break;
      }
    }
  SymPoly acc(cfg);
  partitions::for_each_RT(mu, cfg.n, [&](const partitions::ReverseTableau& T) {
    MPoly prod(1L);
    RF den(1L);
    std::size_t k = 0;
    for (const auto& row : T.rows())
      for (int v : row) {
        prod *= factor[k][v - 1];
        if (!denom[k][v - 1].is_one()) den *= denom[k][v - 1];
        ++k;
      }
    add_split(acc, prod, families::psi(cfg, T) / den);
  });
  return acc;
}

}  // namespace

SymPoly jack_macdonald(const FamilyConfig& cfg, const Partition& lambda) {
  check_caps(cfg, lambda);
  return ordinary_cache().get_or_compute(PolyKey{cfg.family, cfg.n, lambda.parts()}, [&] {
    SymPoly acc(cfg);
    partitions::for_each_RT(lambda, cfg.n, [&](const partitions::ReverseTableau& T) {
      XExp e{};
      for (const auto& row : T.rows())
        for (int v : row) ++e[v - 1];
      acc.add_term(e, families::psi(cfg, T));
    });
    return acc;
  });
}

SymPoly interp_poly(const FamilyConfig& cfg, const Partition& mu, Normalization norm) {
  check_caps(cfg, mu);
  SymPoly monic = monic_cache().get_or_compute(PolyKey{cfg.family, cfg.n, mu.parts()}, [&] { return compute_monic(cfg, mu); });
  switch (norm) {
    case Normalization::monic: return monic;
    case Normalization::unital: return monic.scaled(families::H_factor(cfg, mu).inverse());
    case Normalization::integral: return monic.scaled(families::c_product(cfg, mu));
  }
  return monic;
}

RF eval_at(const SymPoly& p, const ShiftedPoint& x) { return p.eval_at(x); }

SymPoly orbit_sum(const FamilyConfig& cfg, const Partition& kappa) {
  std::vector<int> parts = kappa.resized(cfg.n).parts();
  std::sort(parts.begin(), parts.end());
  SymPoly acc(cfg);
  do {
    int nonzero = 0;
    for (int v : parts) nonzero += v != 0;
    int signs = cfg.family == Family::BM ? 1 << nonzero : 1;
    for (int mask = 0; mask < signs; ++mask) {
      XExp e{};
      int bit = 0;
      for (int i = 0; i < cfg.n; ++i) {
        e[i] = static_cast<std::int16_t>(parts[i]);
        if (parts[i] != 0 && ((mask >> bit++) & 1)) e[i] = static_cast<std::int16_t>(-e[i]);
      }
      acc.add_term(e, RF(1L));
    }
  } while (std::next_permutation(parts.begin(), parts.end()));
  return acc;
}

namespace {

std::size_t complexity(const RF& x) { return x.num().size() + x.den().size(); }

// Solves M X = B in place over the rational-function field.
std::vector<std::vector<RF>> solve(std::vector<std::vector<RF>> m, std::vector<std::vector<RF>> b) {
  std::size_t n = m.size(), cols = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero() && (pivot == n || complexity(m[r][c]) < complexity(m[pivot][c]))) pivot = r;
    if (pivot == n) throw SingularSystem("no pivot in column " + std::to_string(c));
    std::swap(m[c], m[pivot]);
    std::swap(b[c], b[pivot]);
    RF inv = m[c][c].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      RF f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
      for (std::size_t k = 0; k < cols; ++k)
        if (!b[c][k].is_zero()) b[r][k] -= f * b[c][k];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    RF inv = m[r][r].inverse();
    for (auto& v : b[r]) v *= inv;
  }
  return b;
}

struct OracleSystem {
  std::vector<Partition> points;
  std::vector<SymPoly> basis;
  std::vector<std::vector<RF>> matrix;
};

OracleSystem build_system(const FamilyConfig& cfg, int d) {
  OracleSystem s;
  s.points = partitions::partitions_up_to(cfg.n, d);
  for (const auto& k : s.points) s.basis.push_back(orbit_sum(cfg, k));
  for (const auto& l : s.points) {
    auto x = families::shift(cfg, l);
    std::vector<RF> row;
    for (const auto& m : s.basis) row.push_back(m.eval_at(x));
    s.matrix.push_back(std::move(row));
  }
  return s;
}

SymPoly combine(const FamilyConfig& cfg, const OracleSystem& s, const std::vector<std::vector<RF>>& x, std::size_t col) {
  SymPoly acc(cfg);
  for (std::size_t k = 0; k < s.basis.size(); ++k)
    if (!x[k][col].is_zero()) acc += s.basis[k].scaled(x[k][col]);
  return acc;
}

}  // namespace

SymPoly interp_solver_oracle(const FamilyConfig& cfg, int d, const std::map<Partition, RF>& values) {
  OracleSystem s = build_system(cfg, d);
  std::vector<std::vector<RF>> rhs;
  for (const auto& l : s.points) {
    auto it = values.find(l);
    if (it == values.end()) throw std::invalid_argument("no value given at " + l.to_string());
    rhs.push_back({it->second});
  }
  return combine(cfg, s, solve(s.matrix, rhs), 0);
}

std::map<Partition, SymPoly> oracle_unital_basis(const FamilyConfig& cfg, int d) {
  OracleSystem s = build_system(cfg, d);
  std::vector<Partition> targets = partitions::all_partitions(cfg.n, d);
  std::vector<std::vector<RF>> rhs;
  for (const auto& l : s.points) {
    std::vector<RF> row;
    for (const auto& mu : targets) row.push_back(l == mu ? RF(1L) : RF());
    rhs.push_back(std::move(row));
  }
  auto x = solve(s.matrix, rhs);
  std::map<Partition, SymPoly> out;
  for (std::size_t c = 0; c < targets.size(); ++c) out.emplace(targets[c], combine(cfg, s, x, c));
  return out;
}

bool pieri_check(const FamilyConfig& cfg, const Partition& mu) {
  RF base = families::shifted_norm(cfg, mu);
  SymPoly lhs = (SymPoly::norm(cfg) - SymPoly::constant(cfg, base)) * interp_poly(cfg, mu, Normalization::unital);
  SymPoly rhs(cfg);
  for (const auto& lambda : partitions::upper_covers(mu)) {
    RF w = (families::shifted_norm(cfg, lambda) - base) * families::adjacent_b(cfg, lambda, mu);
    rhs += interp_poly(cfg, lambda, Normalization::unital).scaled(w);
  }
  return lhs == rhs;
}

namespace {

template <class BasisFn>
std::map<Partition, RF> peel(SymPoly f, BasisFn basis) {
  std::map<Partition, RF> out;
  const int n = f.config().n;
  while (!f.is_zero()) {
    const auto& [e, c] = *f.terms().begin();
    std::vector<int> parts(e.begin(), e.begin() + n);
    Partition kappa(parts);
    RF coef = c;
    out[kappa] += coef;
    f = f - basis(kappa).scaled(coef);
  }
  return out;
}

}  // namespace

std::map<Partition, RF> expand_in_ordinary_basis(const SymPoly& f) {
  const FamilyConfig cfg = f.config();
  if (families::is_bc(cfg.family)) throw std::logic_error("basis expansion is implemented for type A families");
  return peel(f, [&](const Partition& k) { return jack_macdonald(cfg, k); });
}

std::map<Partition, RF> expand_in_monic_basis(const SymPoly& f) {
  const FamilyConfig cfg = f.config();
  if (families::is_bc(cfg.family)) throw std::logic_error("basis expansion is implemented for type A families");
  return peel(f, [&](const Partition& k) { return interp_poly(cfg, k, Normalization::monic); });
}

}  // namespace interpolatia::interpolation
