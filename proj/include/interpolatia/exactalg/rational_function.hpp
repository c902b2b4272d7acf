#pragma once

#include <array>
#include <optional>
#include <string>

#include "interpolatia/exactalg/mpoly.hpp"

namespace interpolatia::exactalg {

/// Element of Q(vars) in reduced canonical form: gcd(num, den) is constant and
/// den has integer coefficients with gcd 1 and a positive leading coefficient.
/// Two values are equal iff their (num, den) pairs are identical.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Rational& c) : num_(c), den_(1L) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1L) {}              // NOLINT
  explicit RationalFunction(MPoly num) : num_(std::move(num)), den_(1L) {}

  /// Reduces num/den to canonical form. Throws ZeroDenominator if den is 0.
  static RationalFunction make(const MPoly& num, const MPoly& den);
  static RationalFunction var(Var v) { return RationalFunction(MPoly::var(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::optional<Rational> constant_value() const;
  std::uint32_t variables_mask() const { return num_.variables_mask() | den_.variables_mask(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Throws ZeroDenominator when inverting zero.
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// Throws PoleAtPoint if the denominator vanishes at p.
  Rational eval(const Point& p) const;
  RationalFunction substitute(const std::array<std::optional<RationalFunction>, kVarCount>& values) const;
  /// Limit as the variable tends to +infinity with the others kept symbolic.
  /// Returns nullopt when the limit is infinite.
  std::optional<RationalFunction> limit_at_infinity(int var) const;

  /// "num" when the denominator is 1, else "(num)/(den)".
  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

 private:
  RationalFunction(MPoly num, MPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_;
  MPoly den_;
};

using RF = RationalFunction;

/// Evaluates a polynomial at rational-function values of some variables.
RationalFunction substitute_poly(const MPoly& p,
                                 const std::array<std::optional<RationalFunction>, kVarCount>& values);

}  // namespace interpolatia::exactalg
