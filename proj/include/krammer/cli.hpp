#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace krammer {

enum class Command { KrammerMatrix, KrammerPoly, Alexander, Essential, Eigenvector, RelationsCheck, CurveAnalyze };
enum class OutputFormat { Text, Json };

struct CliConfig {
  Command command = Command::KrammerPoly;
  std::optional<int> strands;
  std::vector<std::string> words;    // inline --word values, one per fiber
  std::optional<std::string> input;  // path, or "-" for standard input
  OutputFormat format = OutputFormat::Text;
  std::optional<std::size_t> minor_cap;
  std::optional<int> missing;        // eigenvector only
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRelationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInexact = 3;

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches to run().
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace krammer
