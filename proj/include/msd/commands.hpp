#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "msd/config.hpp"

namespace msd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kConjectureCounterexample = 3,
};

// Published configuration counts for q = 2..19, indexed by q.
inline constexpr std::array<std::uint64_t, 20> kPublishedCounts = {
    0, 0, 1, 1, 2, 2, 5, 6, 16, 28, 43, 162, 427, 1016, 2836, 7432, 20579, 52622, 159172, 449390};

// Lengths from which enumeration needs an explicit opt-in.
inline constexpr std::size_t kLongRunningLength = 15;

struct VerifyOptions {
  std::filesystem::path input;
  bool json = false;
};

struct AnalyzeOptions {
  std::filesystem::path input;
  std::optional<std::string> cycle;  // defaults to the file's "# cycle:" comment
  bool strict_remark3 = false;
  bool json = false;
};

struct EnumerateOptions {
  std::size_t q = 0;
  EnumerationMode mode = EnumerationMode::canonical;
  bool count_only = false;
  std::size_t jobs = 1;
  bool allow_long = false;
  bool pruned = false;
};

struct Table1Options {
  std::size_t max_q = 12;
  std::size_t jobs = 1;
  bool allow_long = false;
  bool pruned = false;
  bool json = false;
};

struct RandomOptions {
  std::size_t n = 0;
  std::size_t extra_arcs = 0;
  std::uint64_t seed = 0;
  bool check = false;
  std::optional<std::filesystem::path> output;
  bool json = false;
};

struct RealizeOptions {
  std::size_t q = 0;
  std::string config;
  std::optional<std::filesystem::path> output;
};

// Each command writes its normal output to `out`, diagnostics to `err`, and
// returns the process exit code.
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_table1(const Table1Options& opts, std::ostream& out, std::ostream& err);
int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);
int cmd_realize(const RealizeOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace msd::cli
