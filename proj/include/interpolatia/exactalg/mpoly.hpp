#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace interpolatia::exactalg {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kParamCount = 6;
inline constexpr int kMaxXVars = 6;
inline constexpr int kVarCount = kParamCount + kMaxXVars;

/// Parameter variables, in the fixed order g < tau < alpha < q < t < a.
/// The x-variables follow them at indices kParamCount.. (see x_index).
enum class Var : std::uint8_t { gamma = 0, tau, alpha, q, t, a };

constexpr int index_of(Var v) { return static_cast<int>(v); }
/// Index of x_i (1-based i) in the variable universe.
int x_index(int i);
bool is_x_index(int idx);
std::string var_name(int idx);

/// Exponent vector over the full variable universe. Negative entries are only
/// meaningful for x-variables (Laurent polynomials).
struct Monomial {
  std::array<std::int16_t, kVarCount> exp{};
  int deg = 0;

  static Monomial of(int var, int power = 1);
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool is_one() const { return deg == 0 && exp == std::array<std::int16_t, kVarCount>{}; }
  bool divides(const Monomial& o) const;
  std::size_t hash() const;
};

/// Graded-lexicographic comparison. Total degree first, then exponents
/// compared from the highest variable index downwards.
int compare(const Monomial& x, const Monomial& y);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Exact evaluation point: a rational value for some subset of the variables.
class Point {
 public:
  Point& set(int var, Rational value);
  Point& set(Var v, Rational value) { return set(index_of(v), std::move(value)); }
  const std::optional<Rational>& get(int var) const { return values_[var]; }
  bool has(int var) const { return values_[var].has_value(); }
  std::string to_string() const;

 private:
  std::array<std::optional<Rational>, kVarCount> values_{};
};

/// Sparse multivariate (Laurent in x) polynomial over Q. Terms are stored in
/// strictly decreasing graded-lex order and no stored coefficient is zero.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rational& c);
  explicit MPoly(long c) : MPoly(Rational(c)) {}

  static MPoly var(Var v, int power = 1) { return var_index(index_of(v), power); }
  static MPoly var_index(int idx, int power = 1);
  static MPoly term(const Monomial& m, const Rational& c);
  /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  int total_degree() const;
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  /// Componentwise minimum exponents over all terms (the monomial content).
  Monomial min_exponents() const;
  /// Bitmask of variable indices that occur with a nonzero exponent.
  std::uint32_t variables_mask() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly scaled(const Rational& c) const;
  MPoly mul_term(const Monomial& m, const Rational& c) const;
  /// Divides every term by the monomial m (exponents are subtracted).
  MPoly div_monomial(const Monomial& m) const;
  MPoly pow(unsigned e) const;

  /// Exact quotient if d divides *this in the polynomial ring, else nullopt.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  /// Coefficients with respect to one variable (index = exponent). Requires
  /// non-negative exponents of that variable.
  std::vector<MPoly> coefficients_in(int var) const;
  static MPoly from_coefficients(int var, const std::vector<MPoly>& coeffs);

  /// Rescales to integer coefficients with gcd 1 and positive leading
  /// coefficient. If scale is given, *this == result * (*scale).
  MPoly integer_primitive(Rational* scale = nullptr) const;
  bool has_integer_coefficients() const;

  /// Throws PoleAtPoint if a variable with a negative exponent evaluates to 0,
  /// and std::invalid_argument if a needed variable is unassigned.
  Rational eval(const Point& p) const;
  /// Substitutes polynomial values for some variables (nullopt = keep).
  MPoly substitute(const std::array<std::optional<MPoly>, kVarCount>& values) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  explicit MPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[vars]: integer-primitive with positive leading
/// coefficient. gcd(0, 0) = 0. Inputs may not carry negative exponents.
MPoly gcd(const MPoly& a, const MPoly& b);
/// Same result through the primitive pseudo-remainder sequence only.
MPoly gcd_reference(const MPoly& a, const MPoly& b);

std::string rational_to_string(const Rational& r);

}  // namespace interpolatia::exactalg
