#include "interpolatia/partitions/tableaux.hpp"

#include <algorithm>

#include "interpolatia/error.hpp"

namespace interpolatia::partitions {

ReverseTableau::ReverseTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {}

std::vector<Partition> ReverseTableau::levels(int n) const {
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> p(static_cast<std::size_t>(shape_.n()), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (int v : rows_[i])
        if (v > k) ++p[i];
    out.emplace_back(std::move(p));
  }
  return out;
}

bool ReverseTableau::is_valid(int n) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.part(static_cast<int>(i) + 1)) return false;
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v < 1 || v > n) return false;
      if (j > 0 && v > rows_[i][j - 1]) return false;
      if (i > 0 && v >= rows_[i - 1][j]) return false;
    }
  }
  return true;
}

namespace {

struct RTSearch {
  const Partition& shape;
  int n;
  Partition conj;
  std::vector<Box> order;
  std::vector<std::vector<int>> rows;
  const std::function<void(const ReverseTableau&)>& visit;

  void run(std::size_t k) {
    if (k == order.size()) {
      visit(ReverseTableau(shape, rows));
      return;
    }
    const Box& s = order[k];
    int hi = n;
    if (s.col > 1) hi = std::min(hi, rows[s.row - 1][s.col - 2]);
    if (s.row > 1) hi = std::min(hi, rows[s.row - 2][s.col - 1] - 1);
    int lo = conj.part(s.col) - s.row + 1;
    for (int v = hi; v >= lo; --v) {
      rows[s.row - 1][s.col - 1] = v;
      run(k + 1);
    }
  }
};

}  // namespace

void for_each_RT(const Partition& shape, int n, const std::function<void(const ReverseTableau&)>& visit) {
  if (shape.length() > n) throw TooManyRows(shape.to_string() + " has more than " + std::to_string(n) + " rows");
  RTSearch search{shape, n, shape.conjugate(), shape.boxes(), {}, visit};
  for (int i = 1; i <= shape.length(); ++i) search.rows.emplace_back(static_cast<std::size_t>(shape.part(i)), 0);
  search.run(0);
}

std::vector<ReverseTableau> enumerate_RT(const Partition& shape, int n) {
  std::vector<ReverseTableau> out;
  for_each_RT(shape, n, [&](const ReverseTableau& t) { out.push_back(t); });
  return out;
}

ReverseTableau distinguished_RT(const Partition& shape) {
  Partition conj = shape.conjugate();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= shape.part(i); ++j) row.push_back(conj.part(j) - i + 1);
    rows.push_back(std::move(row));
  }
  return ReverseTableau(shape, std::move(rows));
}

bool is_horizontal_strip(const Partition& mu, const Partition& nu) {
  if (!contains(mu, nu)) return false;
  for (int i = 1; i < mu.n(); ++i)
    if (nu.part(i) < mu.part(i + 1)) return false;
  return true;
}

StripSets strip_sets(const Partition& mu, const Partition& nu) {
  if (!is_horizontal_strip(mu, nu)) throw NotHorizontalStrip(mu.to_string() + "/" + nu.to_string());
  StripSets out;
  std::vector<bool> row_hit(static_cast<std::size_t>(mu.n()) + 1, false);
  std::vector<bool> col_hit(static_cast<std::size_t>(mu.part(1)) + 1, false);
  for (const Box& s : mu.boxes()) {
    if (!nu.has_box(s)) {
      out.strip.push_back(s);
      row_hit[s.row] = true;
      col_hit[s.col] = true;
    }
  }
  for (const Box& s : mu.boxes()) {
    if (row_hit[s.row]) out.rows.push_back(s);
    if (col_hit[s.col]) out.cols.push_back(s);
    if (row_hit[s.row] && !col_hit[s.col]) out.rows_not_cols.push_back(s);
  }
  return out;
}

bool is_bounded_by(const ReverseTableau& t, const Partition& lambda) {
  Partition conj = lambda.conjugate();
  std::vector<int> first = t.first_row();
  if (static_cast<int>(first.size()) > conj.n()) return false;
  for (std::size_t j = 0; j < first.size(); ++j)
    if (first[j] > conj.part(static_cast<int>(j) + 1)) return false;
  return true;
}

namespace {

void choose_bars(const ReverseTableau& t, const std::vector<Box>& ordered, const std::vector<int>& word, std::size_t from,
                 std::vector<Box>& picked, const Chain& chain, std::vector<BarredTableau>& out) {
  if (picked.size() == word.size()) {
    out.push_back({t, picked, chain});
    return;
  }
  std::size_t need = word.size() - picked.size();
  for (std::size_t k = from; k + need <= ordered.size(); ++k) {
    if (t.at(ordered[k]) != word[picked.size()]) continue;
    picked.push_back(ordered[k]);
    choose_bars(t, ordered, word, k + 1, picked, chain, out);
    picked.pop_back();
  }
}

}  // namespace

std::vector<BarredTableau> enumerate_molev(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
  std::vector<BarredTableau> out;
  auto chains = enumerate_chains(lambda, mu);
  if (chains.empty()) return out;
  std::vector<ReverseTableau> bounded;
  for_each_RT(nu, n, [&](const ReverseTableau& t) {
    if (is_bounded_by(t, lambda)) bounded.push_back(t);
  });
  std::vector<Box> ordered = nu.boxes();
  std::sort(ordered.begin(), ordered.end(), column_less);
  for (const auto& chain : chains) {
    std::vector<int> word = yamanouchi(chain);
    for (const auto& t : bounded) {
      std::vector<Box> picked;
      choose_bars(t, ordered, word, 0, picked, chain, out);
    }
  }
  return out;
}

}  // namespace interpolatia::partitions
