#include "interpolatia/exactalg/rational_function.hpp"

#include <stdexcept>

#include "interpolatia/error.hpp"

namespace interpolatia::exactalg {

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw NotExactDivision(a.to_string() + " by " + b.to_string());
  return *q;
}

}  // namespace

RationalFunction RationalFunction::make(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  if (auto c = den.constant_value()) return RationalFunction(num.scaled(1 / *c), MPoly(1L), 0);
  MPoly g = gcd(num, den);
  MPoly n = exact(num, g), d = exact(den, g);
  Rational s;
  d = d.integer_primitive(&s);
  return RationalFunction(n.scaled(1 / s), std::move(d), 0);
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (!den_.is_one()) return std::nullopt;
  return num_.constant_value();
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_, den_, 0);
  if (den_ == o.den_) return make(num_ + o.num_, den_);
  if (o.den_.is_one()) return RationalFunction(num_ + o.num_ * den_, den_, 0);
  if (den_.is_one()) return RationalFunction(num_ * o.den_ + o.num_, o.den_, 0);
  MPoly g = gcd(den_, o.den_);
  MPoly b = exact(den_, g), d = exact(o.den_, g);
  MPoly t = num_ * d + o.num_ * b;
  if (t.is_zero()) return RationalFunction();
  MPoly h = gcd(t, g);
  MPoly den = b * exact(o.den_, h);
  Rational s;
  den = den.integer_primitive(&s);
  return RationalFunction(exact(t, h).scaled(1 / s), std::move(den), 0);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_, den_, 0);
  MPoly g1 = o.den_.is_one() ? MPoly(1L) : gcd(num_, o.den_);
  MPoly g2 = den_.is_one() ? MPoly(1L) : gcd(o.num_, den_);
  MPoly n = exact(num_, g1) * exact(o.num_, g2);
  MPoly d = exact(den_, g2) * exact(o.den_, g1);
  Rational s;
  d = d.integer_primitive(&s);
  return RationalFunction(n.scaled(1 / s), std::move(d), 0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  Rational s;
  MPoly d = num_.integer_primitive(&s);
  return RationalFunction(den_.scaled(1 / s), std::move(d), 0);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction n(num_.pow(static_cast<unsigned>(e)));
  if (den_.is_one()) return n;
  return RationalFunction(n.num_, den_.pow(static_cast<unsigned>(e)), 0);
}

Rational RationalFunction::eval(const Point& p) const {
  Rational d = den_.eval(p);
  if (d == 0) throw PoleAtPoint("denominator " + den_.to_string() + " vanishes at " + p.to_string());
  return num_.eval(p) / d;
}

RationalFunction substitute_poly(const MPoly& p,
                                 const std::array<std::optional<RationalFunction>, kVarCount>& values) {
  RationalFunction out;
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    RationalFunction factor(t.coef);
    Monomial rest = t.mono;
    bool touched = false;
    for (int i = 0; i < kVarCount; ++i) {
      int e = t.mono.exp[i];
      if (e == 0 || !values[i]) continue;
      touched = true;
      factor *= values[i]->pow(e);
      rest.exp[i] = 0;
      rest.deg -= e;
    }
    if (!touched) {
      kept.push_back(t);
      continue;
    }
    out += factor * RationalFunction(MPoly::term(rest, 1));
  }
  return out + RationalFunction(MPoly::from_terms(std::move(kept)));
}

RationalFunction RationalFunction::substitute(
    const std::array<std::optional<RationalFunction>, kVarCount>& values) const {
  RationalFunction n = substitute_poly(num_, values);
  if (den_.is_one()) return n;
  return n / substitute_poly(den_, values);
}

std::optional<RationalFunction> RationalFunction::limit_at_infinity(int var) const {
  auto nc = num_.coefficients_in(var), dc = den_.coefficients_in(var);
  int dn = static_cast<int>(nc.size()) - 1, dd = static_cast<int>(dc.size()) - 1;
  if (dn < 0) return RationalFunction();
  if (dn > dd) return std::nullopt;
  if (dn < dd) return RationalFunction();
  return make(nc.back(), dc.back());
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace interpolatia::exactalg
