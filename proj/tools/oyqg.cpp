#include "oyqg/cli/app.hpp"

#include <CLI11.hpp>

using namespace oyqg::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::vector<std::string>& lambdas, std::string& primes) {
  sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B2, G2")->capture_default_str();
  sub->add_flag("--transpose", cfg.transpose, "use the transposed Cartan matrix");
  sub->add_option("--max-height", cfg.max_height, "height bound for graded components (0: default for the type)");
  sub->add_option("--dim-cap", cfg.dim_cap, "largest module dimension allowed")->capture_default_str();
  sub->add_option("--backend", cfg.backend, "exact or modular")->capture_default_str();
  sub->add_option("--primes", primes, "comma-separated primes for the modular backend");
  sub->add_option("--k", cfg.k, "number of primes for the modular backend")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for samples and evaluation points")->capture_default_str();
  sub->add_option("--lambda", lambdas, "highest weight in fundamental coordinates, e.g. 1,1 (repeatable)");
  sub->add_option("--out", cfg.out, "write the report to this file");
  sub->add_option("--cache-dir", cfg.cache_dir, "Gram matrix cache directory (default: $OYQG_CACHE_DIR)");
  sub->add_flag("--no-cache", cfg.no_cache, "bypass the Gram matrix cache");
  sub->add_option("--samples", cfg.samples, "random samples per check")->capture_default_str();
  sub->add_flag("--timing", cfg.timing, "include per-check timings (reports are then not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tool for multi-parameter quantum groups and their centers"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> lambdas;
  std::string primes;
  auto* info = app.add_subcommand("algebra-info", "graded dimensions and Gram determinants");
  auto* central = app.add_subcommand("central", "construct z_lambda and verify it");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  for (auto* sub : {info, central, verify}) add_common(sub, cfg, lambdas, primes);
  verify->add_option("--suite", cfg.suite, "hopf, pairing, rosso, modules, center or all")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    for (const auto& l : lambdas) cfg.lambdas.push_back(parse_lambda(l));
    std::stringstream ss(primes);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.primes.push_back(std::stoull(item));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception&) {
    std::cerr << "usage error: --primes expects integers separated by commas\n";
    return kExitUsage;
  }
  return run_command(cfg, std::cout, std::cerr);
}
