// snreorder: supernodal analysis, within-supernode reordering and
// validation from the command line.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"

namespace {

using snr::cli::RunConfig;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("snreorder");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("SNREORDER_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void add_input_options(CLI::App* cmd, RunConfig& c, bool directory_ok) {
  auto* in = cmd->add_option("--input", c.input,
                             directory_ok ? "Matrix Market file or directory"
                                          : "Matrix Market file")
                 ->required();
  if (directory_ok) {
    in->check(CLI::ExistingPath);
  } else {
    in->check(CLI::ExistingFile);
  }
  auto* perm = cmd->add_option("--perm", c.perm,
                               "fill-reducing ordering (new label per line)")
                   ->check(CLI::ExistingFile);
  cmd->add_flag("--mdo", c.mdo, "use minimum degree as the fill ordering")
      ->excludes(perm);
  cmd->add_option("--merge-cap", c.merge_cap,
                  "storage growth allowed by supernode merging")
      ->check(CLI::Range(0.0, 100.0));
  cmd->add_option("--out", c.out, "directory for CSV and permutation output");
}

void add_method_options(CLI::App* cmd, RunConfig& c, std::string& method,
                        std::string& strategy, std::string& rule) {
  cmd->add_option("--method", method, "none|pr|tsp")
      ->check(CLI::IsMember({"none", "pr", "tsp"}));
  cmd->add_option("--strategy", strategy, "natural|ndesc|work (pr)")
      ->check(CLI::IsMember({"natural", "ndesc", "work"}));
  cmd->add_option("--rule", rule, "arbitrary|nearest|farthest (tsp)")
      ->check(CLI::IsMember({"arbitrary", "nearest", "farthest"}));
  cmd->add_flag("--weighted", c.spec.weighted, "weight updaters by width (tsp)");
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Supernodal analysis and within-supernode column reordering"};
  app.require_subcommand(1);

  RunConfig c;
  std::string method = "none", strategy = "work", rule = "farthest";
  std::string methods;

  auto* analyze = app.add_subcommand("analyze", "symbolic report and merge log");
  add_input_options(analyze, c, false);

  auto* reorder =
      app.add_subcommand("reorder", "permutation file and block statistics");
  add_input_options(reorder, c, false);
  add_method_options(reorder, c, method, strategy, rule);

  auto* factor = app.add_subcommand("factor", "numeric factorization check");
  add_input_options(factor, c, false);
  add_method_options(factor, c, method, strategy, rule);
  factor->add_option("--kernels", c.kernels, "scalar|avx2 (default: best)")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  auto* compare = app.add_subcommand(
      "compare", "time, storage and block counts over methods, with profiles");
  add_input_options(compare, c, true);
  compare->add_option("--methods", methods,
                      "comma-separated labels such as FARwts,PR-work or 'all'");
  compare
      ->add_option("--reps", c.reps, "timing repetitions (odd; median taken)")
      ->check(CLI::PositiveNumber);
  compare->add_option("--kernels", c.kernels, "scalar|avx2 (default: best)")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  for (auto* cmd : {reorder, factor, compare}) {
    cmd->add_option("--seed", c.spec.seed, "seed for arbitrary insertion and rhs");
  }

  CLI11_PARSE(app, argc, argv);

  c.spec.method = *snr::parse_method(method);
  c.spec.strategy = *snr::parse_strategy(strategy);
  c.spec.rule = *snr::parse_rule(rule);
  if (methods == "all") {
    for (const auto& m : snr::standard_methods(c.spec.seed)) {
      c.methods.push_back(m.label());
    }
  } else if (!methods.empty()) {
    for (const auto& m : CLI::detail::split(methods, ',')) {
      c.methods.push_back(CLI::detail::trim_copy(m));
    }
  }

  try {
    if (*analyze) return snr::cli::cmd_analyze(c, std::cout);
    if (*reorder) return snr::cli::cmd_reorder(c, std::cout);
    if (*factor) return snr::cli::cmd_factor(c, std::cout);
    if (*compare) return snr::cli::cmd_compare(c, std::cout);
  } catch (const snr::NotPositiveDefinite& e) {
    spdlog::error("{}", e.what());
    return 3;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 1;
}
