#include <iostream>

#include "CLI11.hpp"
#include "interpolatia/cli/cli.hpp"

using namespace interpolatia::cli;

int main(int argc, char** argv) {
  RunConfig rc;
  CLI::App app{"Interpolation polynomials: coefficients, verification suites and conjecture harnesses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", rc.family, "AJ, BJ, AM or BM (default: all the target covers; AJ for compute)");
    sub->add_option("--n", rc.n, "number of variables")->capture_default_str();
    sub->add_option("--lambda", rc.lambda, "partition, e.g. [2,1]");
    sub->add_option("--mu", rc.mu, "partition");
    sub->add_option("--nu", rc.nu, "partition");
    sub->add_option("--norm", rc.norm, "monic, unital or integral")->capture_default_str();
    sub->add_option("--kind", rc.kind, "table kind: b, b_inv or a")->capture_default_str();
    sub->add_option("--max-size,--max", rc.max_size, "largest |lambda| on the grid")->capture_default_str();
    sub->add_option("--out", rc.out, "output file (evidence file for verify and conjecture)");
    sub->add_option("--format", rc.format, "json, csv or text")->capture_default_str();
    sub->add_option("--seed", rc.seed, "seed for sampling")->capture_default_str();
    sub->add_option("--budget-N", rc.budget_N, "largest Polya exponent tried")->capture_default_str();
  };

  auto* compute = app.add_subcommand("compute", "compute a coefficient, a polynomial or a table");
  compute->add_option("quantity", rc.target, "b, b_inv, a, B, A, lr, h, P or table")->required();
  add_common(compute);
  auto* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("suite", rc.target, "pieri, three-route, monotonicity, duality, molev, integrality, commutation")->required();
  add_common(verify);
  auto* conjecture = app.add_subcommand("conjecture", "run a conjecture harness");
  conjecture->add_option("name", rc.target, "int-J, int-M, lr-positivity, lr-S, jack-positivity")->required();
  add_common(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  rc.command = app.get_subcommands().front()->get_name();

  RunResult r = run(rc);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}
