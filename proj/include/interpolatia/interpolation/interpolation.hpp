#pragma once

#include <map>
#include <vector>

#include "interpolatia/interpolation/sympoly.hpp"

namespace interpolatia::interpolation {

using partitions::Partition;

enum class Normalization { monic, unital, integral };
std::string normalization_name(Normalization n);
/// Throws std::invalid_argument on unknown names.
Normalization parse_normalization(const std::string& s);

/// Largest n and |lambda| for which full symbolic polynomials are built.
inline constexpr int kSymbolicMaxN = 3;
inline constexpr int kSymbolicMaxSize = 6;

/// Ordinary monic Jack (AJ, BJ) or Macdonald (AM, BM) polynomial by the
/// tableau formula. For BJ the result is stored in y_i = x_i^2.
/// Throws CapExceeded beyond the symbolic caps.
SymPoly jack_macdonald(const FamilyConfig& cfg, const Partition& lambda);

/// Interpolation polynomial h_mu by the tableau formula.
SymPoly interp_poly(const FamilyConfig& cfg, const Partition& mu, Normalization norm);

RF eval_at(const SymPoly& p, const ShiftedPoint& x);

/// Unique element of degree at most d taking the given values at the shifted
/// points of all partitions of size <= d, found by Gaussian elimination on the
/// orbit-sum basis. Throws SingularSystem, std::invalid_argument on missing keys.
SymPoly interp_solver_oracle(const FamilyConfig& cfg, int d, const std::map<Partition, RF>& values);

/// All unital h_mu with |mu| = d from one solve of the oracle system.
std::map<Partition, SymPoly> oracle_unital_basis(const FamilyConfig& cfg, int d);

/// Orbit sum of x^kappa under the family's Weyl group (stored exponents).
SymPoly orbit_sum(const FamilyConfig& cfg, const Partition& kappa);

/// (||x|| - ||mu bar||) h_mu == sum over covers lambda of (||lambda bar|| - ||mu bar||) a h_lambda.
bool pieri_check(const FamilyConfig& cfg, const Partition& mu);

/// Coefficients of f in the monic Jack/Macdonald basis (type A families).
std::map<Partition, RF> expand_in_ordinary_basis(const SymPoly& f);
/// Coefficients of f in the monic interpolation basis of its family (type A).
std::map<Partition, RF> expand_in_monic_basis(const SymPoly& f);

}  // namespace interpolatia::interpolation
