#include "interpolatia/interpolation/sympoly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace interpolatia::interpolation {

using exactalg::kMaxXVars;

namespace {

int abs_degree(const XExp& e) {
  int d = 0;
  for (auto v : e) d += std::abs(v);
  return d;
}

}  // namespace

bool XExpGreater::operator()(const XExp& a, const XExp& b) const {
  int da = abs_degree(a), db = abs_degree(b);
  if (da != db) return da > db;
  return a > b;
}

SymPoly SymPoly::constant(FamilyConfig cfg, const RF& c) {
  SymPoly p(cfg);
  p.add_term(XExp{}, c);
  return p;
}

SymPoly SymPoly::norm(FamilyConfig cfg) {
  SymPoly p(cfg);
  for (int i = 0; i < cfg.n; ++i) {
    XExp e{};
    e[i] = 1;
    p.add_term(e, RF(1L));
    if (cfg.family == families::Family::BM) {
      e[i] = -1;
      p.add_term(e, RF(1L));
    }
  }
  return p;
}

XExp SymPoly::x_exponents(const XExp& stored) const {
  if (cfg_.family != families::Family::BJ) return stored;
  XExp e = stored;
  for (auto& v : e) v = static_cast<std::int16_t>(2 * v);
  return e;
}

RF SymPoly::coefficient(const XExp& e) const {
  XExp stored = e;
  if (cfg_.family == families::Family::BJ) {
    for (auto& v : stored) {
      if (v % 2 != 0) return RF();
      v = static_cast<std::int16_t>(v / 2);
    }
  }
  auto it = terms_.find(stored);
  return it == terms_.end() ? RF() : it->second;
}

void SymPoly::add_term(const XExp& stored, const RF& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(stored, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o.scaled(RF(-1L)); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r(cfg_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      XExp e{};
      for (int i = 0; i < kMaxXVars; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

SymPoly SymPoly::scaled(const RF& c) const {
  SymPoly r(cfg_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

RF SymPoly::eval_at(const ShiftedPoint& x) const {
  std::vector<RF> base = x;
  if (cfg_.family == families::Family::BJ)
    for (auto& b : base) b = b * b;
  RF sum;
  for (const auto& [e, c] : terms_) {
    RF v = c;
    for (int i = 0; i < cfg_.n; ++i)
      if (e[i] != 0) v *= base[i].pow(e[i]);
    sum += v;
  }
  return sum;
}

int SymPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, abs_degree(x_exponents(e)));
  return d;
}

SymPoly SymPoly::top_degree() const {
  SymPoly r(cfg_);
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (abs_degree(x_exponents(e)) == d) r.terms_.emplace(e, c);
  return r;
}

SymPoly SymPoly::nonnegative_part() const {
  SymPoly r(cfg_);
  for (const auto& [e, c] : terms_) {
    bool ok = true;
    for (auto v : e) ok = ok && v >= 0;
    if (ok) r.terms_.emplace(e, c);
  }
  return r;
}

SymPoly SymPoly::swapped(int i, int j) const {
  SymPoly r(cfg_);
  for (const auto& [key, c] : terms_) {
    XExp e = key;
    std::swap(e[i], e[j]);
    r.terms_.emplace(e, c);
  }
  return r;
}

SymPoly SymPoly::inverted(int i) const {
  SymPoly r(cfg_);
  for (const auto& [key, c] : terms_) {
    XExp e = key;
    e[i] = static_cast<std::int16_t>(-e[i]);
    r.terms_.emplace(e, c);
  }
  return r;
}

bool SymPoly::is_weyl_invariant() const {
  for (int i = 0; i + 1 < cfg_.n; ++i)
    if (swapped(i, i + 1) != *this) return false;
  if (cfg_.family == families::Family::BM && inverted(0) != *this) return false;
  for (const auto& [e, c] : terms_)
    for (auto v : e)
      if (v < 0 && cfg_.family != families::Family::BM) return false;
  return true;
}

SymPoly SymPoly::shifted_by_ones() const {
  if (families::is_bc(cfg_.family)) throw std::logic_error("x + 1 shift is only defined for type A families");
  SymPoly r(cfg_);
  for (const auto& [e, c] : terms_) {
    // Expand prod (x_i + 1)^{e_i} with binomial coefficients.
    std::vector<std::pair<XExp, long>> acc{{XExp{}, 1}};
    for (int i = 0; i < cfg_.n; ++i) {
      std::vector<std::pair<XExp, long>> next;
      long binom = 1;
      for (int k = 0; k <= e[i]; ++k) {
        for (const auto& [m, w] : acc) {
          XExp mm = m;
          mm[i] = static_cast<std::int16_t>(k);
          next.emplace_back(mm, w * binom);
        }
        binom = binom * (e[i] - k) / (k + 1);
      }
      acc = std::move(next);
    }
    for (const auto& [m, w] : acc) r.add_term(m, c * RF(w));
  }
  return r;
}

std::string monomial_string(const XExp& e, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

// A single-term polynomial coefficient can be written inline.
bool is_simple(const RF& c) { return c.is_polynomial() && c.num().size() == 1; }

}  // namespace

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [stored, c] : terms_) {
    std::string mono = monomial_string(x_exponents(stored), cfg_.n);
    bool neg = is_simple(c) && c.num().leading().coef < 0;
    RF mag = neg ? -c : c;
    std::string body;
    if (mono.empty()) body = is_simple(mag) ? mag.to_string() : "(" + mag.to_string() + ")";
    else if (mag.is_one()) body = mono;
    else body = (is_simple(mag) ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + mono;
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace interpolatia::interpolation
