#include "interpolatia/exactalg/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "interpolatia/error.hpp"

namespace interpolatia::exactalg {

int x_index(int i) {
  if (i < 1 || i > kMaxXVars) throw std::out_of_range("x-variable index out of range");
  return kParamCount + i - 1;
}

bool is_x_index(int idx) { return idx >= kParamCount && idx < kVarCount; }

std::string var_name(int idx) {
  static const char* names[kParamCount] = {"g", "tau", "alpha", "q", "t", "a"};
  if (idx < kParamCount) return names[idx];
  return "x" + std::to_string(idx - kParamCount + 1);
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Monomial Monomial::of(int var, int power) {
  Monomial m;
  m.exp[var] = static_cast<std::int16_t>(power);
  m.deg = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kVarCount; ++i) m.exp[i] = static_cast<std::int16_t>(exp[i] + o.exp[i]);
  m.deg = deg + o.deg;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kVarCount; ++i) m.exp[i] = static_cast<std::int16_t>(exp[i] - o.exp[i]);
  m.deg = deg - o.deg;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kVarCount; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp) h = (h ^ static_cast<std::uint16_t>(e)) * 1099511628211ull;
  return h;
}

int compare(const Monomial& x, const Monomial& y) {
  if (x.deg != y.deg) return x.deg < y.deg ? -1 : 1;
  for (int i = kVarCount - 1; i >= 0; --i)
    if (x.exp[i] != y.exp[i]) return x.exp[i] < y.exp[i] ? -1 : 1;
  return 0;
}

Point& Point::set(int var, Rational value) {
  values_[var] = std::move(value);
  return *this;
}

std::string Point::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kVarCount; ++i) {
    if (!values_[i]) continue;
    if (!first) out += ", ";
    first = false;
    out += var_name(i) + "=" + rational_to_string(*values_[i]);
  }
  return out + "}";
}

namespace {

bool greater(const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; }

// Merge two descending term lists, computing a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, negate_b ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MPoly MPoly::var_index(int idx, int power) { return term(Monomial::of(idx, power), 1); }

MPoly MPoly::term(const Monomial& m, const Rational& c) {
  if (c == 0) return MPoly();
  return MPoly(std::vector<Term>{{m, c}});
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return MPoly(std::move(out));
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }

std::optional<Rational> MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

Rational MPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coef;
  return 0;
}

int MPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.deg > d) d = t.mono.deg;
    first = false;
  }
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.exp[var] > d) d = t.mono.exp[var];
    first = false;
  }
  return d;
}

int MPoly::min_degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.exp[var] < d) d = t.mono.exp[var];
    first = false;
  }
  return d;
}

Monomial MPoly::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kVarCount; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  m.deg = 0;
  for (auto e : m.exp) m.deg += e;
  return m;
}

std::uint32_t MPoly::variables_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kVarCount; ++i)
      if (t.mono.exp[i] != 0) mask |= 1u << i;
  return mask;
}

MPoly MPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return MPoly(std::move(out));
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return MPoly(merge(terms_, o.terms_, false));
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (o.is_zero()) return *this;
  return MPoly(merge(terms_, o.terms_, true));
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coef);
  const MPoly& big = terms_.size() >= o.terms_.size() ? *this : o;
  const MPoly& small = terms_.size() >= o.terms_.size() ? o : *this;
  // Each row big*small_term is already sorted; fold rows by pairwise merging.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.terms_.size());
  for (const auto& s : small.terms_) rows.push_back(big.mul_term(s.mono, s.coef).terms_);
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge(rows[i], rows[i + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return MPoly(std::move(rows.front()));
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c == 0) return MPoly();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return MPoly(std::move(out));
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return MPoly();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coef * c});
  return MPoly(std::move(out));
}

MPoly MPoly::div_monomial(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono / m, t.coef});
  return MPoly(std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw ZeroDenominator("division by the zero polynomial");
  if (is_zero()) return MPoly();
  if (d.terms_.size() == 1) {
    const Term& t = d.terms_[0];
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& s : terms_) {
      Monomial q = s.mono / t.mono;
      for (int i = 0; i < kVarCount; ++i)
        if (q.exp[i] < 0 && s.mono.exp[i] >= 0) return std::nullopt;
      out.push_back({q, s.coef / t.coef});
    }
    return MPoly(std::move(out));
  }
  const Term& ld = d.terms_.front();
  std::vector<Term> quotient;
  std::vector<Term> rem = terms_;
  while (!rem.empty()) {
    const Term& lr = rem.front();
    if (lr.mono.deg < ld.mono.deg) return std::nullopt;
    Monomial qm = lr.mono / ld.mono;
    for (int i = 0; i < kVarCount; ++i)
      if (qm.exp[i] < 0) return std::nullopt;
    Rational qc = lr.coef / ld.coef;
    rem = merge(rem, d.mul_term(qm, qc).terms_, true);
    quotient.push_back({qm, std::move(qc)});
  }
  return MPoly(std::move(quotient));
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    int e = t.mono.exp[var];
    if (e < 0) throw std::invalid_argument("negative exponent in coefficients_in");
    if (static_cast<int>(buckets.size()) <= e) buckets.resize(e + 1);
    Term s = t;
    s.mono.exp[var] = 0;
    s.mono.deg -= e;
    buckets[e].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(int var, const std::vector<MPoly>& coeffs) {
  std::vector<Term> all;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms_) {
      Term s = t;
      s.mono.exp[var] = static_cast<std::int16_t>(s.mono.exp[var] + e);
      s.mono.deg += static_cast<int>(e);
      all.push_back(std::move(s));
    }
  return from_terms(std::move(all));
}

MPoly MPoly::integer_primitive(Rational* scale) const {
  if (is_zero()) {
    if (scale) *scale = 1;
    return MPoly();
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational s(num_gcd, den_lcm);
  s.canonicalize();
  if (terms_.front().coef < 0) s = -s;
  if (scale) *scale = s;
  if (s == 1) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef /= s;
  return MPoly(std::move(out));
}

bool MPoly::has_integer_coefficients() const {
  for (const auto& t : terms_)
    if (t.coef.get_den() != 1) return false;
  return true;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  if (e == 0) return r;
  Integer num, den;
  unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace

Rational MPoly::eval(const Point& p) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < kVarCount; ++i) {
      int e = t.mono.exp[i];
      if (e == 0) continue;
      const auto& val = p.get(i);
      if (!val) throw std::invalid_argument("no value assigned to " + var_name(i));
      if (e < 0 && *val == 0) throw PoleAtPoint(var_name(i) + " = 0 in a negative power");
      v *= rational_pow(*val, e);
    }
    sum += v;
  }
  return sum;
}

MPoly MPoly::substitute(const std::array<std::optional<MPoly>, kVarCount>& values) const {
  MPoly out;
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    bool touched = false;
    for (int i = 0; i < kVarCount; ++i)
      if (t.mono.exp[i] != 0 && values[i]) touched = true;
    if (!touched) {
      untouched.push_back(t);
      continue;
    }
    Monomial rest = t.mono;
    MPoly factor(t.coef);
    for (int i = 0; i < kVarCount; ++i) {
      int e = t.mono.exp[i];
      if (e == 0 || !values[i]) continue;
      if (e < 0) throw std::invalid_argument("cannot substitute into a negative power");
      factor *= values[i]->pow(static_cast<unsigned>(e));
      rest.exp[i] = 0;
      rest.deg -= e;
    }
    out += factor.mul_term(rest, 1);
  }
  return out + from_terms(std::move(untouched));
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kVarCount; ++i) {
    int e = m.exp[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool neg = t.coef < 0;
    Rational mag = neg ? Rational(-t.coef) : t.coef;
    if (k == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono = monomial_text(t.mono);
    if (mono.empty()) out += rational_to_string(mag);
    else if (mag == 1) out += mono;
    else out += rational_to_string(mag) + "*" + mono;
  }
  return out;
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.mono.hash();
    h = h * 31 + std::hash<std::string>{}(t.coef.get_str());
  }
  return h;
}

}  // namespace interpolatia::exactalg
