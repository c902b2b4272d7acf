#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interpolatia/exactalg/rational_function.hpp"

namespace interpolatia::exactalg {

enum class Cone { AJ, BJ, AM, BM };

std::string cone_name(Cone c);
/// Parameter variables of a cone, in the fixed variable order.
std::vector<int> cone_variables(Cone c);

enum class VerdictStatus { Certified, Refuted, Inconclusive };
std::string status_name(VerdictStatus s);

/// num*(1+tau)^N (times (1+alpha)^N for BJ) and den times the same factor
/// both have non-negative coefficients after multiplying by sign.
struct PolyaCertificate {
  int N = 0;
  int sign = 1;
};

/// p = constant * monomial * prod (1 - m)^k * cofactor, where the cofactor
/// has non-negative coefficients.
struct AtomFactorization {
  Rational constant = 1;
  Monomial monomial;
  std::vector<std::pair<Monomial, int>> atoms;
  MPoly cofactor{1L};

  MPoly expand() const;
  std::string to_string() const;
};

struct AtomCertificate {
  AtomFactorization num;
  AtomFactorization den;
};

struct PositivityVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<PolyaCertificate> polya;
  std::optional<AtomCertificate> atoms;
  std::optional<Point> witness;

  std::string certificate_text() const;
};

struct ConeBudget {
  int polya_max = 50;
  int random_points = 64;
  std::uint64_t seed = 1;
};

/// Sufficient-condition membership test for the non-negative cone of a
/// family's parameter field, with an exact sampling falsifier.
/// Throws WrongParameterSet if f has variables outside the cone.
PositivityVerdict cone_check(const RationalFunction& f, Cone cone, const ConeBudget& budget = {});

/// Independently re-expands a verdict's certificate or re-evaluates its witness.
bool recheck(const RationalFunction& f, Cone cone, const PositivityVerdict& v);

/// Greedy factorization over the (1 - monomial) atoms; nullopt if it fails.
std::optional<AtomFactorization> atom_factor(const MPoly& p);

}  // namespace interpolatia::exactalg
