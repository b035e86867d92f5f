#pragma once

// Command layer shared by the CLI and its tests. Every subcommand takes a
// normalized JSON input object (file contents inlined, bounds resolved) and
// returns an exit status plus a certificate; verify() replays a certificate
// through the independent checkers only.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordramsey/lift.hpp"

namespace wordramsey::app {

using nlohmann::json;

inline constexpr const char* kSchema = "wordramsey-cert/1";
inline constexpr const char* kToolName = "wordramsey";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kBoundsEnv = "WORDRAMSEY_BOUNDS";

enum ExitStatus : int { kFound = 0, kUnresolved = 1, kInputFailure = 2 };

struct Bounds {
  std::size_t m_max = 2;
  std::size_t horizon = 8;
  std::size_t pool_len = 2;
  std::size_t max_len = kDefaultWordBudget;
  std::size_t sample_len = 3;
  unsigned threads = 1;
};

// Keys as in Bounds; unknown keys and non-positive values are input errors.
void apply_bounds(Bounds& bounds, const json& doc);

struct Outcome {
  int status = kUnresolved;
  json certificate;
};

// subcommand is the space-joined command path, e.g. "hj find-line".
Outcome run(const std::string& subcommand, const json& input, unsigned threads = 1);
std::vector<std::string> subcommands();

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;  // "ok: claim" / "FAIL: claim"
};

VerifyReport verify(const json& certificate);

std::string result_hash(const json& result);

// Coloring file: one "word<TAB>color" per line covering A^N exactly once.
struct ParsedColoring {
  int length = 0;
  int colors = 0;
  std::vector<int> cells;  // by base-k rank
};
ParsedColoring parse_coloring(int k, const std::string& text);
std::string format_coloring(int k, int length, const std::vector<int>& cells);

}  // namespace wordramsey::app
