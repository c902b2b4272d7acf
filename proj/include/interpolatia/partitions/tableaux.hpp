#pragma once

#include <functional>
#include <vector>

#include "interpolatia/partitions/partition.hpp"

namespace interpolatia::partitions {

/// Filling of a shape by values in [n], weakly decreasing along rows and
/// strictly decreasing down columns.
class ReverseTableau {
 public:
  ReverseTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int at(const Box& s) const { return rows_[s.row - 1][s.col - 1]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> first_row() const { return rows_.empty() ? std::vector<int>{} : rows_[0]; }
  /// lambda^(k) = boxes with entry > k, for k = 0..n (as partitions of length n).
  std::vector<Partition> levels(int n) const;
  bool is_valid(int n) const;
  bool operator==(const ReverseTableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Calls visit for every RT of the shape with entries in [n], in row-major
/// backtracking order with larger values first. Throws TooManyRows.
void for_each_RT(const Partition& shape, int n, const std::function<void(const ReverseTableau&)>& visit);
std::vector<ReverseTableau> enumerate_RT(const Partition& shape, int n);
/// T(i, j) = lambda'_j - i + 1; its first row is lambda'.
ReverseTableau distinguished_RT(const Partition& shape);

struct StripSets {
  std::vector<Box> strip;
  std::vector<Box> rows;           // boxes of mu in rows meeting the strip
  std::vector<Box> cols;           // boxes of mu in columns meeting the strip
  std::vector<Box> rows_not_cols;  // rows minus cols
};
/// Throws NotHorizontalStrip unless mu contains nu and mu/nu is a horizontal strip.
StripSets strip_sets(const Partition& mu, const Partition& nu);
bool is_horizontal_strip(const Partition& mu, const Partition& nu);

struct BarredTableau {
  ReverseTableau base;
  std::vector<Box> barred;  // increasing in the column order
  Chain chain;
};

/// True if the first row of the filling, read as a partition, lies inside lambda'.
bool is_bounded_by(const ReverseTableau& t, const Partition& lambda);
/// All lambda-bounded barred tableaux of shape nu over all chains from lambda to mu.
std::vector<BarredTableau> enumerate_molev(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

}  // namespace interpolatia::partitions
