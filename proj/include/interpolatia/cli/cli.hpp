#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "interpolatia/positivity/positivity.hpp"

namespace interpolatia::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitTheorem = 1, kExitUsage = 2, kExitInternal = 3 };

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;  // compute | verify | conjecture
  std::string target;   // quantity, suite or conjecture name
  std::string family;   // empty: every family the target covers
  int n = 2;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string norm = "unital";
  std::string kind = "b";  // table kind for compute table
  int max_size = 5;
  std::string out;
  std::string format = "text";  // json | csv | text
  std::uint64_t seed = 1;
  int budget_N = 50;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // for stdout
  std::string error;   // for stderr
};

const std::vector<std::string>& verify_suites();
const std::vector<std::string>& conjecture_names();

/// Outcome of one verification suite or conjecture harness.
struct SuiteResult {
  std::string name;
  std::vector<std::string> families;
  std::vector<positivity::EvidenceRecord> records;
  std::vector<std::string> failures;  // theorem-level failures only
  long certified = 0;
  long refuted = 0;
  long inconclusive = 0;
};

/// Runs a suite over P_n with sizes <= max_size. Throws UsageError on bad
/// arguments. Records come back in a fixed order whatever the thread count.
SuiteResult run_verify(const RunConfig& cfg);
SuiteResult run_conjecture(const RunConfig& cfg);

/// Full command with exit code, report text and the evidence file written.
RunResult run(const RunConfig& cfg);

}  // namespace interpolatia::cli
