#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "interpolatia/coefficients/coefficients.hpp"

namespace interpolatia::positivity {

using exactalg::ConeBudget;
using exactalg::PositivityVerdict;
using exactalg::Rational;
using exactalg::RF;
using families::FamilyConfig;
using partitions::Partition;

/// One line of an evidence file.
struct EvidenceRecord {
  std::string claim;
  std::string family;  // empty for family-free claims
  int n = 0;
  Partition lambda;
  Partition mu;
  std::optional<Partition> nu;
  std::string verdict;
  std::optional<std::string> value;
  std::optional<std::string> certificate;
  std::optional<std::string> witness;
  std::optional<std::string> detail;

  nlohmann::ordered_json to_json() const;
};

EvidenceRecord record_of(const std::string& claim, const FamilyConfig& cfg, const Partition& lambda, const Partition& mu,
                         const std::optional<Partition>& nu, const RF& value, const PositivityVerdict& v);

struct CoefficientVerdict {
  Partition nu;
  RF coefficient;
  PositivityVerdict verdict;
};

/// Expansion of a normalized difference f_lambda - f_mu in a normalized basis.
struct DualityReport {
  std::string claim;
  std::string family;
  int n = 0;
  Partition lambda;
  Partition mu;
  bool contains = false;
  std::vector<CoefficientVerdict> coefficients;
  std::string note;
  int certified = 0;
  int refuted = 0;
  int inconclusive = 0;

  /// Coefficient at mu, if it was computed.
  std::optional<RF> coefficient_at(const Partition& nu) const;
  /// Containment gives no Refuted coefficient; non-containment gives -1 at mu.
  bool theorem_holds() const;
  std::vector<EvidenceRecord> records() const;
};

/// Coefficients b_{lambda nu} - b_{mu nu} of the normalized binomial
/// expansions, each cone-checked in the family's cone.
DualityReport containment_duality(const FamilyConfig& cfg, const Partition& lambda, const Partition& mu, const ConeBudget& budget = {});

/// Normalized power sums p_lambda(x+1)/p_lambda(1) - (same for mu) in the
/// basis p_nu/p_nu(1). Throws PartTooLarge if a part exceeds n.
DualityReport powersum_duality(int n, const Partition& lambda, const Partition& mu);

/// tau = infinity endpoint: e_{lambda'}(x+1)/e_{lambda'}(1) - (same for mu)
/// in the basis e_{nu'}/e_{nu'}(1).
DualityReport elementary_duality(int n, const Partition& lambda, const Partition& mu);

/// AJ coefficient differences evaluated at a rational tau0 (tau0 >= 0).
DualityReport specialization_duality(int n, const Partition& lambda, const Partition& mu, const Rational& tau0);

/// P_lambda(x)/P_lambda(t^delta) - (same for mu), AM family, expanded over
/// the monic interpolation basis by leading-term peeling and checked against
/// the b-table. Throws RouteMismatch if the two disagree.
DualityReport macdonald_duality(int n, const Partition& lambda, const Partition& mu, const ConeBudget& budget = {});

/// Binomial formula for AJ (P(x+1)/P(1) over P_nu/P_nu(1)) or AM
/// (P(x)/P(t^delta) over h^monic_nu/P_nu(t^delta)): every expansion
/// coefficient equals b_{lambda nu}.
bool binomial_formula_holds(const FamilyConfig& cfg, const Partition& lambda);

struct MolevComparison {
  std::vector<Partition> S;  // c^lambda_{mu nu} != 0
  std::vector<Partition> M;  // a Molev tableau exists
  std::vector<Partition> contains_both;
  bool slice_holds = false;               // sizes <= |mu| + 1 ({mu} expected when nu = 0)
  std::vector<Partition> disagreements;   // beyond the slice
  std::vector<EvidenceRecord> records(const std::string& claim, const FamilyConfig& cfg, const Partition& mu, const Partition& nu) const;
};

/// S^F and M over P_n with sizes <= d.
MolevComparison molev_set_compare(const FamilyConfig& cfg, const Partition& mu, const Partition& nu, int d);

enum class SamplerClaim { CGS, KT };

struct SamplerReport {
  SamplerClaim claim = SamplerClaim::CGS;
  Partition lambda;
  Partition mu;
  bool hypothesis = false;  // (weak) dominance
  long evaluated = 0;
  std::vector<EvidenceRecord> negatives;
  bool consistent() const { return !hypothesis || negatives.empty(); }
};

/// Exact values of P_lambda(y;tau0)/P_lambda(1;tau0) - (same for mu), with
/// y = x (CGS) or x + 1 (KT), over x in grid^n and the given tau values
/// (nullopt stands for tau = infinity). Exploratory only.
SamplerReport evaluation_sampler(SamplerClaim claim, int n, const Partition& lambda, const Partition& mu,
                                 const std::vector<std::optional<Rational>>& taus, const std::vector<Rational>& grid);

}  // namespace interpolatia::positivity
