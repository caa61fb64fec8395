#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ptol::cli {

enum class Command {
  validate_poset,
  validate_tolerance,
  blocks,
  neighbors,
  compose,
  permute,
  amicable,
  enumerate,
  pairs,
  verify_theorem,
};

// Exit statuses shared by every subcommand.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kInputError = 2;

struct RunConfig {
  Command command = Command::validate_poset;
  std::vector<std::string> inputs;  // poset file first, then tolerance files
  bool json = false;
  bool explain = false;
  bool count_only = false;
  bool cross_check = false;
  bool dedup = false;
  bool timing = true;
  std::size_t max_n = 0;
  std::size_t jobs = 1;
  std::string filter = "all";
};

// Parses arguments (without the program name). Returns the config, or the
// exit status when parsing already settled the run (help, usage error).
std::variant<RunConfig, int> parse_command_line(std::vector<std::string> const& args,
                                                std::ostream& out, std::ostream& err);

// Executes one subcommand. Reports go to `out`, diagnostics to `err`.
int run(RunConfig const& config, std::ostream& out, std::ostream& err);

// parse_command_line followed by run.
int main_entry(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ptol::cli
