#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cantor::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInfeasible = 3 };

struct Row {
  std::string quantity;
  std::optional<long> index;
  std::string exact;
  std::string decimal;
  std::string error_bound;
};

struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Row> rows;
  std::uint64_t seed = 0;
};

std::string to_csv(const OutputRecord& record);
std::string to_json(const OutputRecord& record);

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics and timing to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
