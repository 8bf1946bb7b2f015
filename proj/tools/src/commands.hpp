#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace shilov::cli {

enum class Format { Json, Text };

struct JobConfig {
  std::string command;
  std::string input_path;  // "-" reads stdin
  std::string inline_json;
  std::optional<Flavor> flavor;
  std::optional<int> rank;
  std::vector<int> tuple;
  double tol = 1e-6;
  Tolerances eps;
  std::uint64_t seed = 20240607;
  std::optional<int> suite;
  bool witness = false;
  Format format = Format::Json;
};

// Exit codes: 0 success, 1 validation error, 2 numerical instability, 3 parse error.
int exit_code(const Error& e);

// Runs one command; the report goes to `out`, diagnostics to `err`.
int execute(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (including the program name) and executes.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shilov::cli
