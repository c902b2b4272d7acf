#include <algorithm>
#include <bit>
#include <optional>

#include "interpolatia/exactalg/mpoly.hpp"

namespace interpolatia::exactalg {

namespace {

using UPoly = std::vector<MPoly>;

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

MPoly gcd_core(const MPoly& a, const MPoly& b, bool heuristic);
MPoly gcd_impl(const MPoly& a, const MPoly& b, bool heuristic);

MPoly normalized(const MPoly& p) { return p.integer_primitive(); }

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

MPoly content(const UPoly& p, bool heuristic) {
  std::vector<const MPoly*> order;
  for (const auto& c : p)
    if (!c.is_zero()) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const MPoly* x, const MPoly* y) { return x->size() < y->size(); });
  MPoly g;
  for (const MPoly* c : order) {
    g = gcd_impl(g, *c, heuristic);
    if (g.is_constant()) return MPoly(1L);
  }
  return g;
}

UPoly primitive_part(const UPoly& p, const MPoly& c) {
  if (c.is_one()) return p;
  UPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.is_zero() ? x : exact(x, c));
  return out;
}

// Pseudo-remainder of a by b in the main variable.
UPoly prem(UPoly a, const UPoly& b) {
  int db = udeg(b);
  const MPoly& lb = b.back();
  while (!a.empty() && udeg(a) >= db) {
    MPoly la = a.back();
    int shift = udeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    trim(a);
  }
  return a;
}

Integer integer_content(const MPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

Integer max_norm(const MPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer v = abs(t.coef.get_num());
    if (v > m) m = v;
  }
  return m;
}

MPoly eval_var(const MPoly& p, int v, const Integer& xi) {
  std::vector<Integer> powers{Integer(1)};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    int e = t.mono.exp[v];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * xi);
    Term s = t;
    s.mono.exp[v] = 0;
    s.mono.deg -= e;
    s.coef *= powers[e];
    out.push_back(std::move(s));
  }
  return MPoly::from_terms(std::move(out));
}

// Inverse of eval_var: symmetric xi-adic digits become coefficients of v^i.
MPoly reconstruct(const MPoly& g, int v, const Integer& xi) {
  std::vector<Term> out;
  Integer half = xi / 2;
  for (const auto& t : g.terms()) {
    Integer c = t.coef.get_num();
    for (int i = 0; c != 0; ++i) {
      Integer d;
      mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      if (d != 0) {
        Term s{t.mono * Monomial::of(v, i), Rational(d)};
        out.push_back(std::move(s));
      }
      c = (c - d) / xi;
    }
  }
  return MPoly::from_terms(std::move(out));
}

// Heuristic gcd of integer polynomials by evaluation at a large integer and
// digit reconstruction. The result is verified by trial division, so a
// returned value is always correct; nullopt means the heuristic gave up.
std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b, int depth) {
  if (a.is_zero()) return b.integer_primitive().scaled(integer_content(b));
  if (b.is_zero()) return a.integer_primitive().scaled(integer_content(a));
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
    return MPoly(Rational(g));
  }
  if (depth > 8) return std::nullopt;
  std::uint32_t both = a.variables_mask() & b.variables_mask();
  std::uint32_t any = a.variables_mask() | b.variables_mask();
  int v = std::countr_zero(both ? both : any);
  Integer ca = integer_content(a), cb = integer_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  MPoly pa = a.scaled(Rational(1) / Rational(ca)), pb = b.scaled(Rational(1) / Rational(cb));
  Integer na = max_norm(pa), nb = max_norm(pb);
  Integer xi = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ea = eval_var(pa, v, xi), eb = eval_var(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto g = heuristic_gcd(ea, eb, depth + 1);
      if (g) {
        MPoly cand = reconstruct(*g, v, xi);
        if (!cand.is_zero()) {
          cand = cand.integer_primitive();
          if (pa.divide_exact(cand) && pb.divide_exact(cand)) return cand.scaled(Rational(cg));
        }
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

// Both inputs are nonzero, free of monomial content.
MPoly gcd_core(const MPoly& a, const MPoly& b, bool heuristic) {
  if (a.is_constant() || b.is_constant()) return MPoly(1L);
  MPoly A = normalized(a), B = normalized(b);
  if (A == B) return A;
  if (A.size() <= B.size()) {
    if (B.divide_exact(A)) return A;
  } else if (A.divide_exact(B)) {
    return B;
  }
  if (heuristic)
    if (auto h = heuristic_gcd(A, B, 0)) return normalized(*h);
  std::uint32_t ma = A.variables_mask(), mb = B.variables_mask();
  if (ma != mb) {
    std::uint32_t only = ma ^ mb;
    int v = std::countr_zero(only);
    const MPoly& has = (ma >> v) & 1u ? A : B;
    const MPoly& lacks = (ma >> v) & 1u ? B : A;
    MPoly g = lacks;
    for (const auto& c : has.coefficients_in(v)) {
      if (c.is_zero()) continue;
      g = gcd_impl(g, c, heuristic);
      if (g.is_constant()) return MPoly(1L);
    }
    return normalized(g);
  }
  int v = -1, best = 0;
  for (int i = 0; i < kVarCount; ++i) {
    if (!((ma >> i) & 1u)) continue;
    int d = std::max(A.degree_in(i), B.degree_in(i));
    if (v < 0 || d < best) {
      v = i;
      best = d;
    }
  }
  UPoly ua = A.coefficients_in(v), ub = B.coefficients_in(v);
  MPoly ca = content(ua, heuristic), cb = content(ub, heuristic);
  MPoly gc = gcd_impl(ca, cb, heuristic);
  UPoly pa = primitive_part(ua, ca), pb = primitive_part(ub, cb);
  if (udeg(pa) < udeg(pb)) std::swap(pa, pb);
  UPoly g;
  while (true) {
    UPoly r = prem(pa, pb);
    if (r.empty()) {
      g = pb;
      break;
    }
    if (udeg(r) == 0) {
      g = {MPoly(1L)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, content(r, heuristic));
  }
  return normalized(gc * MPoly::from_coefficients(v, g));
}

MPoly gcd_impl(const MPoly& a, const MPoly& b, bool heuristic) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  Monomial ea = a.min_exponents(), eb = b.min_exponents();
  Monomial g;
  g.deg = 0;
  for (int i = 0; i < kVarCount; ++i) {
    g.exp[i] = std::min(ea.exp[i], eb.exp[i]);
    g.deg += g.exp[i];
  }
  MPoly core = gcd_core(a.div_monomial(ea), b.div_monomial(eb), heuristic);
  return normalized(core.mul_term(g, 1));
}


}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return gcd_impl(a, b, true); }

MPoly gcd_reference(const MPoly& a, const MPoly& b) { return gcd_impl(a, b, false); }

}  // namespace interpolatia::exactalg
