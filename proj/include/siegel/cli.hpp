#pragma once

#include "siegel/grouptheory.hpp"
#include "siegel/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace siegel {

struct JobSpec {
  std::string command;
  int d = 1;
  Int n = 3;
  std::optional<Int> m;
  std::optional<std::string> lambda;
  std::optional<std::string> profile;
  std::optional<int> r;
  std::optional<std::string> S;
  std::optional<std::string> chain;
  std::optional<std::string> g;
  std::optional<int> count;
  std::string format = "json";
  std::string mode = "symbolic";
  bool annotate = false;
  std::size_t cap = 200000;
  unsigned threads = 1;
  int maxGenus = kDefaultMaxGenus;
};

struct RunResult {
  int status = 0;  // 0 ok, 1 internal, 2 validation, 3 scope
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitScope = 3;

/// Parses `--lambda a1,...,ad[@m0]`; checks length d and dominance.
Weight parse_lambda(const std::string& text, int d);

/// Runs a validated job.
RunResult run(const JobSpec& spec);

/// Parses command line arguments (without the program name) and runs them.
RunResult run(const std::vector<std::string>& args);

}  // namespace siegel
