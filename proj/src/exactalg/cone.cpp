#include "interpolatia/exactalg/cone.hpp"

#include <algorithm>
#include <random>

#include "interpolatia/error.hpp"

namespace interpolatia::exactalg {

std::string cone_name(Cone c) {
  switch (c) {
    case Cone::AJ: return "AJ";
    case Cone::BJ: return "BJ";
    case Cone::AM: return "AM";
    case Cone::BM: return "BM";
  }
  return "?";
}

std::vector<int> cone_variables(Cone c) {
  switch (c) {
    case Cone::AJ: return {index_of(Var::tau)};
    case Cone::BJ: return {index_of(Var::tau), index_of(Var::alpha)};
    case Cone::AM: return {index_of(Var::q), index_of(Var::t)};
    case Cone::BM: return {index_of(Var::q), index_of(Var::t), index_of(Var::a)};
  }
  return {};
}

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Certified: return "Certified";
    case VerdictStatus::Refuted: return "Refuted";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

bool nonnegative(const MPoly& p) {
  for (const auto& t : p.terms())
    if (t.coef < 0) return false;
  return true;
}

bool is_jack(Cone c) { return c == Cone::AJ || c == Cone::BJ; }

MPoly polya_multiplier(Cone cone) {
  MPoly m = MPoly(1L) + MPoly::var(Var::tau);
  if (cone == Cone::BJ) m *= MPoly(1L) + MPoly::var(Var::alpha);
  return m;
}

std::optional<PolyaCertificate> polya_search(const RationalFunction& f, Cone cone, int max_n) {
  if (f.is_zero()) return PolyaCertificate{0, 1};
  MPoly mult = polya_multiplier(cone);
  MPoly num = f.num(), den = f.den();
  for (int n = 0; n <= max_n; ++n) {
    for (int sign : {1, -1}) {
      MPoly a = sign > 0 ? num : -num, b = sign > 0 ? den : -den;
      if (nonnegative(a) && nonnegative(b)) return PolyaCertificate{n, sign};
    }
    num *= mult;
    den *= mult;
  }
  return std::nullopt;
}

MPoly one_minus(const Monomial& m) { return MPoly(1L) - MPoly::term(m, 1); }

std::optional<AtomCertificate> atom_search(const RationalFunction& f) {
  if (f.is_zero()) return std::nullopt;
  auto n = atom_factor(f.num());
  if (!n) return std::nullopt;
  auto d = atom_factor(f.den());
  if (!d) return std::nullopt;
  if (n->constant * d->constant <= 0) return std::nullopt;
  return AtomCertificate{*n, *d};
}

Rational random_value(std::mt19937_64& rng, bool unit_interval) {
  std::uniform_int_distribution<int> den_dist(2, 97);
  int den = den_dist(rng);
  if (unit_interval) {
    std::uniform_int_distribution<int> num_dist(1, den - 1);
    return Rational(num_dist(rng), den);
  }
  std::uniform_int_distribution<int> num_dist(1, 4 * den);
  Rational r(num_dist(rng), den);
  r.canonicalize();
  return r;
}

std::optional<Point> falsify(const RationalFunction& f, Cone cone, const ConeBudget& budget) {
  std::vector<int> vars = cone_variables(cone);
  std::vector<Rational> grid;
  if (is_jack(cone)) grid = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
  else grid = {Rational(1, 5), Rational(1, 2), Rational(4, 5)};
  auto try_point = [&](const Point& p) -> bool {
    try {
      return f.eval(p) < 0;
    } catch (const PoleAtPoint&) {
      return false;
    }
  };
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Point p;
    for (std::size_t k = 0; k < vars.size(); ++k) p.set(vars[k], grid[idx[k]]);
    if (try_point(p)) return p;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  std::mt19937_64 rng(budget.seed);
  for (int r = 0; r < budget.random_points; ++r) {
    Point p;
    for (int v : vars) p.set(v, random_value(rng, !is_jack(cone)));
    if (try_point(p)) return p;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AtomFactorization> atom_factor(const MPoly& p) {
  if (p.is_zero()) return std::nullopt;
  AtomFactorization out;
  out.monomial = p.min_exponents();
  MPoly rest = p.div_monomial(out.monomial);
  Rational c0 = rest.constant_term();
  if (c0 == 0) return std::nullopt;
  out.constant = c0;
  rest = rest.scaled(1 / c0);
  while (!nonnegative(rest)) {
    std::vector<const Term*> negative;
    for (const auto& t : rest.terms())
      if (t.coef < 0) negative.push_back(&t);
    std::sort(negative.begin(), negative.end(),
              [](const Term* x, const Term* y) { return compare(x->mono, y->mono) < 0; });
    bool progressed = false;
    for (const Term* t : negative) {
      Monomial m = t->mono;
      auto q = rest.divide_exact(one_minus(m));
      if (!q) continue;
      if (!out.atoms.empty() && out.atoms.back().first == m) ++out.atoms.back().second;
      else out.atoms.emplace_back(m, 1);
      rest = *q;
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  out.cofactor = rest;
  return out;
}

MPoly AtomFactorization::expand() const {
  MPoly p = MPoly::term(monomial, constant);
  for (const auto& [m, k] : atoms) p *= one_minus(m).pow(static_cast<unsigned>(k));
  return p * cofactor;
}

std::string AtomFactorization::to_string() const {
  std::string out = rational_to_string(constant);
  if (!monomial.is_one()) out += "*" + MPoly::term(monomial, 1).to_string();
  for (const auto& [m, k] : atoms) {
    out += "*(" + one_minus(m).to_string() + ")";
    if (k != 1) out += "^" + std::to_string(k);
  }
  if (!cofactor.is_one()) out += "*(" + cofactor.to_string() + ")";
  return out;
}

std::string PositivityVerdict::certificate_text() const {
  if (polya) return "polya N=" + std::to_string(polya->N) + " sign=" + std::to_string(polya->sign);
  if (atoms) return "atoms num=" + atoms->num.to_string() + " den=" + atoms->den.to_string();
  return "";
}

PositivityVerdict cone_check(const RationalFunction& f, Cone cone, const ConeBudget& budget) {
  std::uint32_t allowed = 0;
  for (int v : cone_variables(cone)) allowed |= 1u << v;
  if (f.variables_mask() & ~allowed)
    throw WrongParameterSet(f.to_string() + " is not in the parameter field of " + cone_name(cone));
  PositivityVerdict v;
  if (is_jack(cone)) {
    v.polya = polya_search(f, cone, budget.polya_max);
    if (v.polya) {
      v.status = VerdictStatus::Certified;
      return v;
    }
  } else {
    if (f.is_zero()) {
      v.status = VerdictStatus::Certified;
      v.atoms = AtomCertificate{};
      v.atoms->num.constant = 0;
      return v;
    }
    v.atoms = atom_search(f);
    if (v.atoms) {
      v.status = VerdictStatus::Certified;
      return v;
    }
  }
  v.witness = falsify(f, cone, budget);
  v.status = v.witness ? VerdictStatus::Refuted : VerdictStatus::Inconclusive;
  return v;
}

bool recheck(const RationalFunction& f, Cone cone, const PositivityVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Refuted:
      if (!v.witness) return false;
      try {
        return f.eval(*v.witness) < 0;
      } catch (const PoleAtPoint&) {
        return false;
      }
    case VerdictStatus::Certified:
      if (v.polya) {
        MPoly mult = polya_multiplier(cone).pow(static_cast<unsigned>(v.polya->N));
        MPoly a = (f.num() * mult).scaled(v.polya->sign), b = (f.den() * mult).scaled(v.polya->sign);
        return nonnegative(a) && nonnegative(b) && RationalFunction::make(a, b) == f;
      }
      if (v.atoms) {
        if (f.is_zero()) return v.atoms->num.constant == 0;
        const auto& n = v.atoms->num;
        const auto& d = v.atoms->den;
        if (!nonnegative(n.cofactor) || !nonnegative(d.cofactor)) return false;
        if (n.constant * d.constant <= 0) return false;
        return RationalFunction::make(n.expand(), d.expand()) == f;
      }
      return false;
    case VerdictStatus::Inconclusive:
      return true;
  }
  return false;
}

}  // namespace interpolatia::exactalg
