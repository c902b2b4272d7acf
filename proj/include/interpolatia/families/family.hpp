#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interpolatia/exactalg/cone.hpp"
#include "interpolatia/partitions/tableaux.hpp"

namespace interpolatia::families {

using exactalg::RF;
using partitions::Box;
using partitions::Partition;
using partitions::ReverseTableau;

enum class Family { AJ, BJ, AM, BM };

std::string family_name(Family f);
/// Parses "AJ" | "BJ" | "AM" | "BM"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& s);
exactalg::Cone cone_of(Family f);
inline bool is_jack(Family f) { return f == Family::AJ || f == Family::BJ; }
inline bool is_bc(Family f) { return f == Family::BJ || f == Family::BM; }

struct FamilyConfig {
  Family family = Family::AJ;
  int n = 1;

  FamilyConfig() = default;
  /// Throws std::invalid_argument unless 1 <= n <= kMaxXVars.
  FamilyConfig(Family f, int vars);
  std::string to_string() const;
  bool operator==(const FamilyConfig&) const = default;
};

using ShiftedPoint = std::vector<RF>;

ShiftedPoint shift(const FamilyConfig& cfg, const Partition& lambda);
RF norm_at(const FamilyConfig& cfg, const ShiftedPoint& p);
/// ||shift(lambda)|| with a per-thread-safe cache.
RF shifted_norm(const FamilyConfig& cfg, const Partition& lambda);

struct Hooks {
  RF c;
  RF c_prime;
  std::optional<RF> d;  // only for BJ and BM
};
/// Throws BoxOutsideShape.
Hooks hooklengths(const FamilyConfig& cfg, const Partition& lambda, const Box& s);

/// psi_{mu/nu} for a horizontal strip; depends only on Jack versus Macdonald.
RF psi_strip(const FamilyConfig& cfg, const Partition& mu, const Partition& nu);
RF psi(const FamilyConfig& cfg, const ReverseTableau& T);

/// Products over the boxes of lambda.
RF c_product(const FamilyConfig& cfg, const Partition& lambda);
RF c_prime_product(const FamilyConfig& cfg, const Partition& lambda);
RF d_product(const FamilyConfig& cfg, const Partition& lambda);

/// h^monic_lambda(shift(lambda)) from the closed form.
RF H_factor(const FamilyConfig& cfg, const Partition& lambda);

/// Closed-form a_{lambda mu} for a cover. Throws NotACover.
RF adjacent_b(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu);

/// Constant subtracted at a box of value v in the monic combinatorial formula:
/// AJ: a' + (n - v - l') tau; BJ: the same plus alpha (to be squared);
/// AM and BM: q^{a'} t^{n - v - l'} (times a for BM).
RF box_constant(const FamilyConfig& cfg, const Partition& shape, const Box& s, int v);

/// Value of one box factor of the monic formula when x_v takes the value xv.
RF box_factor(const FamilyConfig& cfg, const RF& xv, const RF& constant);

/// h^monic_mu evaluated at a point by summing over reverse tableaux.
/// The serial version is the reference; the parallel one splits the tableaux
/// into fixed chunks and merges the chunk sums in order.
RF monic_value_serial(const FamilyConfig& cfg, const Partition& mu, const ShiftedPoint& x);
RF monic_value_parallel(const FamilyConfig& cfg, const Partition& mu, const ShiftedPoint& x);

}  // namespace interpolatia::families
