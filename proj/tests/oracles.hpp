#pragma once

#include <vector>

#include "interpolatia/coefficients/coefficients.hpp"

// Independent checks used by the acceptance binary. None of them calls the
// library routine it is used to confirm.
namespace oracle {

using interpolatia::exactalg::RF;
using interpolatia::families::FamilyConfig;
using interpolatia::partitions::Partition;

/// C(n, k) from Pascal's triangle, 0 outside 0 <= k <= n.
long long binomial(int n, int k);

/// Every coefficient of the (polynomial) f is a non-negative integer.
bool nonneg_integer_polynomial(const RF& f);

/// Pieri identity for h_mu, with every h taken from the linear-solver basis
/// and a from its closed form.
bool pieri_from_solver(const FamilyConfig& cfg, const Partition& mu);

/// [Z,B] = B[Z,A] on P_n^{<=d}, with B from the chain-weight route.
bool commutation(const FamilyConfig& cfg, int d);

/// B C = D B on P_n^{<=d} for p = h_nu, C peeled from the symbolic products
/// h_mu h_nu and D = diag(b_{lambda nu}).
bool cd_relation(const FamilyConfig& cfg, int d, const Partition& nu);

/// Binomial formula for AJ or AM checked by evaluating both sides at a few
/// rational points x, with b from the recursive route.
bool binomial_expansion_at_points(const FamilyConfig& cfg, const Partition& lambda);

/// {lambda : |lambda| <= |mu| + 1, lambda contains mu and nu}, or {mu} when
/// nu = 0 (h_0 = 1).
std::vector<Partition> molev_slice(int n, const Partition& mu, const Partition& nu);

}  // namespace oracle
