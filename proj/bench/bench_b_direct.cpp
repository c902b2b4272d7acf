// Serial reference versus OpenMP tableau kernel for b_direct.
// Usage: bench_b_direct [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "interpolatia/coefficients/coefficients.hpp"

using namespace interpolatia;
using families::Family;
using partitions::Partition;

namespace {

struct Case {
  Family family;
  int n;
  std::vector<int> lambda;
  std::vector<int> mu;
};

template <class F>
double seconds(int reps, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) reps = 1;
  const Case cases[] = {
      {Family::AJ, 4, {4, 3, 2, 1}, {3, 2, 1, 1}}, {Family::AJ, 5, {5, 4, 3, 2, 1}, {4, 3, 2, 1}},
      {Family::BJ, 3, {5, 3, 2}, {4, 2, 1}},       {Family::AM, 4, {4, 3, 2, 1}, {3, 2, 1, 1}},
      {Family::BM, 3, {4, 3, 2}, {3, 2, 1}},       {Family::BM, 2, {6, 4}, {5, 3}},
  };
  std::printf("threads %d, repeats %d\n", omp_get_max_threads(), reps);
  std::printf("%-4s %2s %-12s %-12s %10s %10s %8s %s\n", "fam", "n", "lambda", "mu", "serial_s", "omp_s", "speedup", "agree");
  for (const auto& c : cases) {
    families::FamilyConfig cfg(c.family, c.n);
    Partition l(c.lambda), m(c.mu);
    l = l.resized(c.n);
    m = m.resized(c.n);
    coefficients::RF s, p;
    double ts = seconds(reps, [&] { s = coefficients::b_direct_serial(cfg, l, m); });
    double tp = seconds(reps, [&] { p = coefficients::b_direct_parallel(cfg, l, m); });
    std::printf("%-4s %2d %-12s %-12s %10.4f %10.4f %8.2f %s\n", families::family_name(c.family).c_str(), c.n, l.to_string().c_str(),
                m.to_string().c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, s == p ? "yes" : "NO");
  }
  return 0;
}
