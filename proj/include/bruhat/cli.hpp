#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bruhat/orbit.hpp"

namespace bruhat::cli {

enum class Format { Json, Dot, Text };

struct JobSpec {
  std::string command;
  std::string diagram;
  /// Comma-separated 1-based node labels; empty means J is empty.
  std::string j;
  Format format = Format::Json;
  std::uint64_t budget = kDefaultBudget;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitVerify = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
};

const std::vector<std::string>& commands();

RunResult run(const JobSpec& spec);

/// Parses argv. Returns a RunResult directly for --help and parse errors.
std::variant<JobSpec, RunResult> parse(int argc, const char* const* argv);

int main(int argc, const char* const* argv);

}  // namespace bruhat::cli
