#pragma once

#include "annulab/cli/json_io.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace annulab::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kDomain = 3, kUnknownStrict = 4 };

struct Options {
  bool tsv = false;
  bool strict = false;
  std::optional<std::int64_t> n_max;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand on a parsed document; results go to out, diagnostics to err.
int run_command(const std::string& name, const json& doc, const Options& opt, std::ostream& out, std::ostream& err);

/// Parses text, then runs; JSON syntax errors are validation failures.
int run_text(const std::string& name, const std::string& text, const Options& opt, std::ostream& out,
             std::ostream& err);

}  // namespace annulab::cli
