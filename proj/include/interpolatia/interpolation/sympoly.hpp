#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "interpolatia/families/family.hpp"

namespace interpolatia::interpolation {

using exactalg::RF;
using families::FamilyConfig;
using families::ShiftedPoint;

using XExp = std::array<std::int16_t, exactalg::kMaxXVars>;

/// Graded (by sum of absolute exponents), then lexicographic with x1 most
/// significant; larger monomials first.
struct XExpGreater {
  bool operator()(const XExp& a, const XExp& b) const;
};

/// Symmetric polynomial in x1..xn with rational-function coefficients. For BJ
/// the stored exponents are those of y_i = x_i^2; for BM exponents may be
/// negative (Laurent). The family tag fixes this interpretation.
class SymPoly {
 public:
  using TermMap = std::map<XExp, RF, XExpGreater>;

  SymPoly() = default;
  explicit SymPoly(FamilyConfig cfg) : cfg_(cfg) {}
  static SymPoly constant(FamilyConfig cfg, const RF& c);
  /// The family norm ||x|| as a polynomial.
  static SymPoly norm(FamilyConfig cfg);

  const FamilyConfig& config() const { return cfg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e in the x-variables (for BJ odd exponents give 0).
  RF coefficient(const XExp& e) const;
  /// Adds c at a stored exponent.
  void add_term(const XExp& stored, const RF& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const RF& c) const;
  SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
  bool operator==(const SymPoly& o) const { return cfg_ == o.cfg_ && terms_ == o.terms_; }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  RF eval_at(const ShiftedPoint& x) const;
  /// Degree in x (twice the stored degree for BJ; largest |exponent| sum for BM).
  int degree() const;
  /// Terms of maximal degree.
  SymPoly top_degree() const;
  /// Terms whose exponents are all non-negative.
  SymPoly nonnegative_part() const;

  SymPoly swapped(int i, int j) const;
  /// x_i -> x_i^{-1} (BM only).
  SymPoly inverted(int i) const;
  /// Invariance under the generators of the family's Weyl group.
  bool is_weyl_invariant() const;
  /// P(x + 1): each x_i replaced by x_i + 1. Not defined for BJ and BM.
  SymPoly shifted_by_ones() const;

  std::string to_string() const;
  /// Monomial in x-variable exponents (doubled for BJ).
  XExp x_exponents(const XExp& stored) const;

 private:
  FamilyConfig cfg_;
  TermMap terms_;
};

std::string monomial_string(const XExp& x_exponents, int n);

}  // namespace interpolatia::interpolation
