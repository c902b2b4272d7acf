#include "interpolatia/partitions/partition.hpp"

#include <algorithm>
#include <charconv>

#include "interpolatia/error.hpp"

namespace interpolatia::partitions {

std::string Box::to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

bool column_less(const Box& a, const Box& b) { return a.col < b.col || (a.col == b.col && a.row > b.row); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidPartition("negative part in " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("parts not weakly decreasing in " + to_string());
  }
}

Partition Partition::parse(std::string_view text, int n) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw InvalidPartition("expected [a,b,...], got '" + std::string(text) + "'");
  std::vector<int> parts;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw InvalidPartition("bad part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw InvalidPartition("trailing comma in '" + std::string(text) + "'");
  }
  Partition p(parts);
  if (p.length() > n) throw TooManyRows(p.to_string() + " has more than " + std::to_string(n) + " rows");
  return p.resized(n);
}

int Partition::size() const {
  int s = 0;
  for (int v : parts_) s += v;
  return s;
}

int Partition::length() const {
  int l = 0;
  for (int v : parts_)
    if (v > 0) ++l;
  return l;
}

Partition Partition::conjugate() const {
  int width = part(1);
  std::vector<int> c(static_cast<std::size_t>(width), 0);
  for (int v : parts_)
    for (int j = 0; j < v; ++j) ++c[j];
  return Partition(std::move(c));
}

Partition Partition::resized(int m) const {
  std::vector<int> p(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n(); ++i) {
    if (i < m) p[i] = parts_[i];
    else if (parts_[i] != 0) throw TooManyRows(to_string() + " does not fit in " + std::to_string(m) + " rows");
  }
  return Partition(std::move(p));
}

Partition Partition::with_part(int i, int value) const {
  std::vector<int> p = parts_;
  p[i - 1] = value;
  return Partition(std::move(p));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= n(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  int l = length();
  if (l == 0) return "[0]";
  std::string out = "[";
  for (int i = 0; i < l; ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return parts_ <=> o.parts_;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 0;
  for (int v : p.parts()) h = h * 131 + static_cast<std::size_t>(v) + 1;
  return h;
}

namespace {

void check_lengths(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw LengthMismatch(a.to_string() + " and " + b.to_string() + " have different lengths");
}

void partitions_rec(int n, int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  int slots = n - static_cast<int>(cur.size());
  for (int v = std::min(remaining, max_part); v >= 0; --v) {
    if (v * slots < remaining) break;
    cur.push_back(v);
    partitions_rec(n, remaining - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n, int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, d, d, cur, out);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n, int d) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto level = all_partitions(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool contains(const Partition& lambda, const Partition& mu) {
  check_lengths(lambda, mu);
  for (int i = 1; i <= lambda.n(); ++i)
    if (lambda.part(i) < mu.part(i)) return false;
  return true;
}

bool dominates(const Partition& lambda, const Partition& mu, bool weak) {
  check_lengths(lambda, mu);
  if (!weak && lambda.size() != mu.size()) return false;
  long a = 0, b = 0;
  for (int i = 1; i <= lambda.n(); ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool covers(const Partition& lambda, const Partition& mu) {
  return contains(lambda, mu) && lambda.size() == mu.size() + 1;
}

std::vector<Partition> lower_covers(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 1; i <= lambda.n(); ++i)
    if (lambda.part(i) > 0 && lambda.part(i) > lambda.part(i + 1)) out.push_back(lambda.with_part(i, lambda.part(i) - 1));
  return out;
}

std::vector<Partition> upper_covers(const Partition& lambda) {
  std::vector<Partition> out;
  for (int i = 1; i <= lambda.n(); ++i)
    if (i == 1 || lambda.part(i) < lambda.part(i - 1)) out.push_back(lambda.with_part(i, lambda.part(i) + 1));
  return out;
}

Box cover_box(const Partition& lambda, const Partition& mu) {
  if (!covers(lambda, mu)) throw NotACover(lambda.to_string() + " does not cover " + mu.to_string());
  for (int i = 1; i <= lambda.n(); ++i)
    if (lambda.part(i) != mu.part(i)) return {i, lambda.part(i)};
  throw NotACover("unreachable");
}

ArmLeg arm_leg(const Partition& lambda, const Box& s) {
  if (!lambda.has_box(s)) throw BoxOutsideShape(s.to_string() + " is not in " + lambda.to_string());
  ArmLeg r;
  r.arm = lambda.part(s.row) - s.col;
  r.coarm = s.col - 1;
  r.coleg = s.row - 1;
  int i = s.row;
  while (lambda.part(i + 1) >= s.col) ++i;
  r.leg = i - s.row;
  return r;
}

long n_stat(const Partition& lambda) {
  long s = 0;
  for (int i = 1; i <= lambda.n(); ++i) s += static_cast<long>(i - 1) * lambda.part(i);
  return s;
}

namespace {

void chains_rec(const Partition& cur, const Partition& mu, Chain& prefix, std::vector<Chain>& out) {
  prefix.push_back(cur);
  if (cur.size() == mu.size()) {
    if (cur == mu) out.push_back(prefix);
  } else {
    for (const auto& next : lower_covers(cur))
      if (contains(next, mu)) chains_rec(next, mu, prefix, out);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<Chain> enumerate_chains(const Partition& lambda, const Partition& mu) {
  std::vector<Chain> out;
  if (!contains(lambda, mu)) return out;
  Chain prefix;
  chains_rec(lambda, mu, prefix, out);
  return out;
}

std::vector<int> yamanouchi(const Chain& chain) {
  std::vector<int> word;
  for (std::size_t i = chain.size(); i-- > 1;) word.push_back(cover_box(chain[i - 1], chain[i]).row);
  return word;
}

Partition truncate_english(const Partition& lambda, int m) {
  if (m < 0 || m > lambda.size()) throw SizeOutOfRange("cannot take " + std::to_string(m) + " boxes of " + lambda.to_string());
  std::vector<int> p(static_cast<std::size_t>(lambda.n()), 0);
  for (int i = 0; i < lambda.n() && m > 0; ++i) {
    p[i] = std::min(m, lambda.part(i + 1));
    m -= p[i];
  }
  return Partition(std::move(p));
}

}  // namespace interpolatia::partitions
