#ifndef SNREORDER_CLI_COMMANDS_HPP_
#define SNREORDER_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "snreorder/pipeline.hpp"

namespace snr::cli {

struct RunConfig {
  std::filesystem::path input;  // a matrix, or a directory for compare
  std::filesystem::path perm;   // fill-reducing ordering; empty = natural
  bool mdo = false;             // minimum degree instead of --perm
  double merge_cap = 0.125;
  MethodSpec spec;
  std::vector<std::string> methods;  // compare only; labels
  int reps = 7;
  std::filesystem::path out = ".";
  std::string kernels;  // "", "scalar" or "avx2"
};

// Each command writes a human summary to `report` and CSV files under
// config.out. They return the process exit code; library errors propagate
// as exceptions.
int cmd_analyze(const RunConfig& config, std::ostream& report);
int cmd_reorder(const RunConfig& config, std::ostream& report);
int cmd_factor(const RunConfig& config, std::ostream& report);
int cmd_compare(const RunConfig& config, std::ostream& report);

// Matrices named by config.input: the file itself, or every *.mtx inside a
// directory, sorted by name.
std::vector<std::filesystem::path> input_matrices(
    const std::filesystem::path& input);

// Default method set for compare.
std::vector<std::string> default_compare_methods();

}  // namespace snr::cli

#endif  // SNREORDER_CLI_COMMANDS_HPP_
