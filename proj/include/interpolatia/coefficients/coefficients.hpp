#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "interpolatia/interpolation/interpolation.hpp"

namespace interpolatia::coefficients {

using exactalg::RF;
using families::FamilyConfig;
using interpolation::SymPoly;
using partitions::Partition;

/// b_{lambda mu} = h^monic_mu(shift(lambda)) / H(mu), summed over reverse
/// tableaux without building h_mu. Memoized.
RF b_direct(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);
/// Same value from the OpenMP tableau kernel (not memoized).
RF b_direct_parallel(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);
/// Same value with the serial kernel (not memoized); the bench baseline.
RF b_direct_serial(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);

/// Adjacent coefficient a_{lambda mu}: the closed form on covers, 0 otherwise.
RF a_adjacent(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);

/// Sum over saturated chains of wt(chain) * prod a. Throws DegenerateNorm.
RF b_weighted(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);
/// Induction on |lambda| - |mu| through the Pieri recursion. Throws DegenerateNorm.
RF b_recursive(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);

/// Inverse coefficients b' by the signed chain weights.
RF b_inverse(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);
/// b' by its own recursion over lower covers of lambda.
RF b_inverse_recursive(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);

/// Weight of a chain in the binomial weighted sum.
RF chain_weight(const FamilyConfig& cfg, const partitions::Chain& chain);
/// prod a_{zeta_i zeta_{i+1}} along a chain.
RF chain_product(const FamilyConfig& cfg, const partitions::Chain& chain);

/// c^lambda_{mu nu} by the LR chain weights.
RF lr_weighted(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu);
/// c^lambda_{mu nu} = sum b'_{lambda zeta} b_{zeta mu} b_{zeta nu}.
RF lr_via_bbb(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu);
/// Coefficient of h_lambda in h_mu * h_nu, peeled off by triangular
/// evaluation of the symbolic product (symbolic caps apply).
RF lr_product_oracle(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const Partition& nu);

/// p given by its values at shifted points.
using PointValues = std::function<RF(const Partition&)>;
PointValues values_of(const FamilyConfig& cfg, const SymPoly& p);

RF structure_weighted(const FamilyConfig& cfg, const PointValues& p, const Partition& lambda, const Partition& mu);
RF structure_bbb(const FamilyConfig& cfg, const PointValues& p, const Partition& lambda, const Partition& mu);
/// c^lambda_mu(p) by both routes. Throws RouteMismatch if they differ.
RF structure_constants(const FamilyConfig& cfg, const SymPoly& p, const Partition& lambda, const Partition& mu);

struct IntegralForms {
  RF B;
  RF A;  // B on covers, 0 otherwise
};
IntegralForms integral_forms(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);
/// q = 1 + g, t = 1 + g tau, a = 1 + g alpha.
RF to_gamma_parameters(const RF& f);

struct IntegralityVerdict {
  bool holds = false;
  int sign = 1;               // sign removed before the coefficient test
  exactalg::Monomial monomial;  // monomial in q, t, a removed (Macdonald families)
  RF reduced;                 // what was tested for non-negative integer coefficients
  std::string detail;
};
/// AJ/BJ: f is a polynomial with non-negative integer coefficients.
/// AM/BM: f = sign * q^i t^j a^k * g with g in (g, tau, alpha) having
/// non-negative integer coefficients.
IntegralityVerdict integrality(const FamilyConfig& cfg, const RF& f);

enum class Kind { b, b_inv, a, lr, structure };
std::string kind_name(Kind k);

struct TableEntry {
  Partition lambda;
  Partition mu;
  std::optional<Partition> nu;
  RF value;
};

struct CoefficientTable {
  FamilyConfig family;
  Kind kind = Kind::b;
  std::vector<TableEntry> entries;
  /// family,n,kind,lambda,mu,nu,value with quoted partition fields.
  std::string to_csv() const;
};

/// b, b' or a over all pairs in P_n with |lambda| <= d and lambda containing mu.
CoefficientTable table(const FamilyConfig& cfg, Kind kind, int d);

/// Square matrices indexed by a list of partitions.
using Matrix = std::vector<std::vector<RF>>;
Matrix matrix_of(const std::vector<Partition>& index, const std::function<RF(const Partition&, const Partition&)>& entry);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
/// [x, y] = xy - yx.
Matrix commutator(const Matrix& x, const Matrix& y);

/// [Z,B] == B[Z,A] on the block P_n^{<=d}.
bool commutation_holds(const FamilyConfig& cfg, int d);
/// C == B^{-1} D B on P_n^{<=d}, with C from the weighted route.
bool cd_relation_holds(const FamilyConfig& cfg, int d, const SymPoly& p);

}  // namespace interpolatia::coefficients
