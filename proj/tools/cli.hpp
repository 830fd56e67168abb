#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acmwild::cli {

enum class Command { construct, table, restrict, simplicity, certify, bound };
enum class Format { json, markdown };

// Forms of complete intersections are drawn from SeededRng(seed, this counter),
// far from the counters used for phi.
inline constexpr std::uint64_t kVarietyStreamCounter = 1ULL << 40;

struct RunConfig {
  Command command = Command::certify;
  int n = 2;
  int a = 1;
  int s = 3;
  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  std::optional<int> t_min;  // default -n-4
  std::optional<int> t_max;  // default 4
  std::vector<int> ci_degrees;
  Format format = Format::markdown;
  std::optional<std::string> output_path;
};

struct RunResult {
  int exit_code = 0;
  std::string report;       // the artifact, in the requested format
  std::string diagnostics;  // refusal or failure reasons
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Dispatches one command. Exit code 0 on success or a true verdict, 1 on a
/// failed certificate or refused precondition, 2 on invalid input.
RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes the report to stdout or --output.
int main_entry(int argc, char** argv);

}  // namespace acmwild::cli
