#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glcp::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailure = 2 };

enum class Format { kTable, kJson };

struct RunConfig {
  std::string command;
  std::string graph_path;
  /// Raw --delta token: a decimal, "golden", "gamma" or "eta".
  std::string delta;
  std::string weights_path;
  std::string vector_path;
  std::vector<int> mis;
  double tol = 1e-9;
  int cap = 20;
  Format format = Format::kTable;
  std::uint64_t seed = 1;
  int trials = 10;
  int max_n = 8;
  int workers = 1;
};

/// Parses argv and runs one command. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glcp::cli
