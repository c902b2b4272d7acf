#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace interpolatia::partitions {

/// A box (i, j) of a Young diagram, 1-based row and column.
struct Box {
  int row = 1;
  int col = 1;
  auto operator<=>(const Box&) const = default;
  std::string to_string() const;
};

/// Column order on boxes: by column, and within a column from the bottom up.
bool column_less(const Box& a, const Box& b);

/// Weakly decreasing tuple of non-negative integers with an explicit length n.
/// Conjugates are also stored as Partitions, with length equal to their
/// number of nonzero parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition unless the parts are non-negative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  static Partition zero(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// Parses "[2,2,1]" and pads with zeros to length n. Throws InvalidPartition
  /// on malformed text and TooManyRows if there are more than n nonzero parts.
  static Partition parse(std::string_view text, int n);

  int n() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; 0 beyond the stored length.
  int part(int i) const { return i >= 1 && i <= n() ? parts_[i - 1] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const;
  bool is_zero() const { return size() == 0; }
  bool has_box(const Box& s) const { return s.row >= 1 && s.col >= 1 && s.col <= part(s.row); }

  /// Conjugate partition, of length lambda_1.
  Partition conjugate() const;
  /// The same parts padded or truncated (zeros only) to length m.
  Partition resized(int m) const;
  Partition with_part(int i, int value) const;
  /// Boxes in row-major (English) reading order.
  std::vector<Box> boxes() const;

  std::string to_string() const;
  /// Total order: by size, then lexicographically on the parts.
  std::strong_ordering operator<=>(const Partition& o) const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

/// All partitions of d with at most n parts, in increasing lex order.
std::vector<Partition> all_partitions(int n, int d);
/// All partitions in P_n with size at most d, in the total order.
std::vector<Partition> partitions_up_to(int n, int d);

bool contains(const Partition& lambda, const Partition& mu);
bool dominates(const Partition& lambda, const Partition& mu, bool weak);
bool covers(const Partition& lambda, const Partition& mu);
/// Partitions obtained by removing one corner box (mu with lambda covers mu),
/// rows ascending.
std::vector<Partition> lower_covers(const Partition& lambda);
/// Partitions obtained by adding one box inside P_n, rows ascending.
std::vector<Partition> upper_covers(const Partition& lambda);
/// The single box of lambda / mu for a cover. Throws NotACover otherwise.
Box cover_box(const Partition& lambda, const Partition& mu);

struct ArmLeg {
  int arm = 0;
  int coarm = 0;
  int leg = 0;
  int coleg = 0;
};
/// Throws BoxOutsideShape if s is not in lambda.
ArmLeg arm_leg(const Partition& lambda, const Box& s);

/// n(lambda) = sum (i - 1) lambda_i.
long n_stat(const Partition& lambda);

using Chain = std::vector<Partition>;
/// All saturated chains lambda = zeta_0 > ... > zeta_k = mu, ordered
/// lexicographically by the sequence of removed boxes.
std::vector<Chain> enumerate_chains(const Partition& lambda, const Partition& mu);
/// Rows of the removed boxes read from the bottom of the chain upwards.
std::vector<int> yamanouchi(const Chain& chain);

/// Partition formed by the first m boxes of lambda in row-major order.
/// Throws SizeOutOfRange unless 0 <= m <= |lambda|.
Partition truncate_english(const Partition& lambda, int m);

}  // namespace interpolatia::partitions
