#include "interpolatia/cli/cli.hpp"

#include <fstream>
#include <sstream>

#include "interpolatia/error.hpp"

namespace interpolatia::cli {

using coefficients::RF;
using families::FamilyConfig;
using partitions::Partition;
using json = nlohmann::ordered_json;

namespace {

FamilyConfig config_of(const RunConfig& rc) {
  families::Family f;
  try {
    f = families::parse_family(rc.family.empty() ? "AJ" : rc.family);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown family '" + rc.family + "'");
  }
  if (rc.n < 1 || rc.n > exactalg::kMaxXVars) throw UsageError("--n must be between 1 and " + std::to_string(exactalg::kMaxXVars));
  return FamilyConfig(f, rc.n);
}

Partition partition_arg(const std::string& flag, const std::string& text, int n) {
  if (text.empty()) throw UsageError(flag + " is required here");
  try {
    return Partition::parse(text, n);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string format_of(const RunConfig& rc) {
  if (rc.format != "json" && rc.format != "csv" && rc.format != "text") throw UsageError("--format must be json, csv or text");
  return rc.format;
}

json meta(const RunConfig& rc) {
  json j;
  j["tool"] = "interpolatia";
  j["version"] = kVersion;
  j["command"] = rc.command;
  j["target"] = rc.target;
  return j;
}

std::string compute(const RunConfig& rc) {
  const std::string fmt = format_of(rc);
  FamilyConfig cfg = config_of(rc);
  if (rc.target == "table") {
    coefficients::Kind k;
    if (rc.kind == "b") k = coefficients::Kind::b;
    else if (rc.kind == "b_inv") k = coefficients::Kind::b_inv;
    else if (rc.kind == "a") k = coefficients::Kind::a;
    else throw UsageError("--kind must be b, b_inv or a");
    if (rc.max_size < 0 || rc.max_size > 8) throw UsageError("--max-size out of range");
    auto t = coefficients::table(cfg, k, rc.max_size);
    if (fmt != "json") return t.to_csv();
    json j = meta(rc);
    j["family"] = families::family_name(cfg.family);
    j["n"] = cfg.n;
    j["kind"] = rc.kind;
    j["max_size"] = rc.max_size;
    j["entries"] = json::array();
    for (const auto& e : t.entries)
      j["entries"].push_back({{"lambda", e.lambda.to_string()}, {"mu", e.mu.to_string()}, {"value", e.value.to_string()}});
    return j.dump(2) + "\n";
  }

  std::string value, lambda, mu, nu;
  if (rc.target == "h" || rc.target == "P") {
    bool h = rc.target == "h";
    Partition p = partition_arg(h ? "--mu" : "--lambda", h ? rc.mu : rc.lambda, cfg.n);
    (h ? mu : lambda) = p.to_string();
    interpolation::Normalization norm;
    try {
      norm = interpolation::parse_normalization(rc.norm);
    } catch (const std::invalid_argument&) {
      throw UsageError("--norm must be monic, unital or integral");
    }
    try {
      value = (h ? interpolation::interp_poly(cfg, p, norm) : interpolation::jack_macdonald(cfg, p)).to_string();
    } catch (const CapExceeded& e) {
      throw UsageError(e.what());
    }
  } else {
    Partition l = partition_arg("--lambda", rc.lambda, cfg.n);
    Partition m = partition_arg("--mu", rc.mu, cfg.n);
    lambda = l.to_string();
    mu = m.to_string();
    RF v;
    if (rc.target == "b") v = coefficients::b_direct(cfg, l, m);
    else if (rc.target == "b_inv") v = coefficients::b_inverse(cfg, l, m);
    else if (rc.target == "a") v = coefficients::a_adjacent(cfg, l, m);
    else if (rc.target == "B") v = coefficients::integral_forms(cfg, l, m).B;
    else if (rc.target == "A") v = coefficients::integral_forms(cfg, l, m).A;
    else if (rc.target == "lr") {
      Partition x = partition_arg("--nu", rc.nu, cfg.n);
      nu = x.to_string();
      v = coefficients::lr_weighted(cfg, l, m, x);
    } else {
      throw UsageError("unknown quantity '" + rc.target + "' (b, b_inv, a, B, A, lr, h, P, table)");
    }
    value = v.to_string();
  }

  if (fmt == "text") return value + "\n";
  if (fmt == "csv")
    return "family,n,kind,lambda,mu,nu,value\n" + families::family_name(cfg.family) + "," + std::to_string(cfg.n) + "," + rc.target + "," +
           (lambda.empty() ? "" : quote(lambda)) + "," + (mu.empty() ? "" : quote(mu)) + "," + (nu.empty() ? "" : quote(nu)) + "," +
           quote(value) + "\n";
  json j = meta(rc);
  j["family"] = families::family_name(cfg.family);
  j["n"] = cfg.n;
  if (!lambda.empty()) j["lambda"] = lambda;
  if (!mu.empty()) j["mu"] = mu;
  if (!nu.empty()) j["nu"] = nu;
  if (rc.target == "h") j["norm"] = rc.norm;
  j["value"] = value;
  return j.dump(2) + "\n";
}

std::string evidence_path(const RunConfig& rc) {
  if (!rc.out.empty()) return rc.out;
  return rc.target + (rc.command == "verify" ? ".evidence.jsonl" : ".findings.jsonl");
}

void write_evidence(const std::string& path, const std::vector<positivity::EvidenceRecord>& records) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  for (const auto& r : records) f << r.to_json().dump() << "\n";
}

std::string report(const RunConfig& rc, const SuiteResult& s, const std::string& path, bool passed) {
  const std::string fmt = format_of(rc);
  const bool verify = rc.command == "verify";
  std::vector<const positivity::EvidenceRecord*> findings;
  if (!verify)
    for (const auto& r : s.records)
      if (r.verdict == "Refuted") findings.push_back(&r);
  std::string fams;
  for (const auto& f : s.families) fams += (fams.empty() ? "" : " ") + f;

  if (fmt == "json") {
    json j = meta(rc);
    j["families"] = s.families;
    j["n"] = rc.n;
    j["max_size"] = rc.max_size;
    j["seed"] = rc.seed;
    j["budget_N"] = rc.budget_N;
    j["evidence"] = path;
    j["records"] = s.records.size();
    j["certified"] = s.certified;
    j["refuted"] = s.refuted;
    j["inconclusive"] = s.inconclusive;
    if (verify) {
      j["failures"] = s.failures;
      j["result"] = passed ? "PASS" : "FAIL";
    } else {
      j["findings"] = json::array();
      for (const auto* r : findings) j["findings"].push_back(r->to_json());
    }
    return j.dump(2) + "\n";
  }
  if (fmt == "csv") {
    std::ostringstream o;
    o << "command,target,families,n,max_size,seed,budget_N,records,certified,refuted,inconclusive,failures,result\n"
      << rc.command << "," << rc.target << "," << quote(fams) << "," << rc.n << "," << rc.max_size << "," << rc.seed << ","
      << rc.budget_N << "," << s.records.size() << "," << s.certified << "," << s.refuted << "," << s.inconclusive << ","
      << (verify ? s.failures.size() : findings.size()) << "," << (verify ? (passed ? "PASS" : "FAIL") : "done") << "\n";
    return o.str();
  }
  std::ostringstream o;
  o << "interpolatia " << kVersion << " " << rc.command << " " << rc.target << "\n";
  o << "families " << fams << "  n=" << rc.n << "  max-size=" << rc.max_size << "  seed=" << rc.seed << "  budget-N=" << rc.budget_N << "\n";
  o << "records " << s.records.size() << "  certified " << s.certified << "  refuted " << s.refuted << "  inconclusive " << s.inconclusive << "\n";
  o << "evidence " << path << "\n";
  if (verify) {
    for (const auto& f : s.failures) o << "failure " << f << "\n";
    o << "result " << (passed ? "PASS" : "FAIL") << "\n";
  } else {
    for (const auto* r : findings) o << "FINDING " << r->to_json().dump() << "\n";
    o << "findings " << findings.size() << (findings.empty() ? "" : "  (counterexample candidates, see above)") << "\n";
  }
  return o.str();
}

}  // namespace

RunResult run(const RunConfig& rc) {
  RunResult res;
  const bool suite = rc.command == "verify" || rc.command == "conjecture";
  bool wrote = false;
  try {
    if (rc.command == "compute") {
      std::string text = compute(rc);
      if (rc.out.empty()) {
        res.output = text;
      } else {
        std::ofstream f(rc.out);
        if (!f) throw std::runtime_error("cannot write " + rc.out);
        f << text;
      }
      return res;
    }
    if (!suite) throw UsageError("unknown command '" + rc.command + "'");
    format_of(rc);
    SuiteResult s = rc.command == "verify" ? run_verify(rc) : run_conjecture(rc);
    const std::string path = evidence_path(rc);
    write_evidence(path, s.records);
    wrote = true;
    bool passed = s.failures.empty();
    res.output = report(rc, s, path, passed);
    if (rc.command == "verify" && !passed) res.exit_code = kExitTheorem;
    return res;
  } catch (const UsageError& e) {
    res.exit_code = kExitUsage;
    res.error = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    res.exit_code = kExitInternal;
    res.error = std::string("internal error: ") + e.what();
  }
  if (suite && !wrote && res.exit_code == kExitInternal) {
    try {
      write_evidence(evidence_path(rc), {});
    } catch (const std::exception&) {
    }
  }
  return res;
}

}  // namespace interpolatia::cli
