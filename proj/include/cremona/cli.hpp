#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cremona/dynamics.hpp"
#include "cremona/report.hpp"

namespace cremona::cli {

enum class Format { Human, Json };

struct CliConfig {
  int n_max = 0;  // 0: 64 for de Jonquieres maps, 16 otherwise
  dynamics::Caps caps;
  int relation_bound = 24;
  Format format = Format::Human;
  int jobs = 0;  // 0: hardware concurrency

  /// Throws DomainError unless every bound is positive.
  void validate() const;
};

/// Exit codes: 0 success, 1 mathematical failure, 2 usage or parse error.
enum ExitCode { kOk = 0, kMathFailure = 1, kUsage = 2 };

/// Named maps usable in place of a map expression.
using MapTable = std::map<std::string, BirMap>;

struct Outcome {
  int exit_code = kOk;
  io::ReportDoc doc;
};

/// Runs one subcommand given as words (without the program name), e.g.
/// {"commutator", "(x, x*y)", "(2*x, x*y)"}. Never throws: failures become
/// error documents. Global options inside words override `base`.
Outcome execute(const std::vector<std::string>& words, const CliConfig& base = {}, const MapTable& names = {});

/// Full command line: global options, one subcommand, output on `out`
/// (human text or JSON), diagnostics on `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// Batch file: `name = <map>` lines bind names for the lines after them,
/// other lines are subcommand invocations; '#' starts a comment. Lines run
/// concurrently on `config.jobs` threads and results keep input order.
/// Exit code: 2 if any line is a usage error, else 1 if any line failed, else 0.
Outcome run_batch(const std::string& content, const std::string& label, const CliConfig& config,
                  const MapTable& names = {});

}  // namespace cremona::cli
