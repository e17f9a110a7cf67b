#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cp2genus/render.hpp"

namespace cp2 {

/// Exit codes shared by all commands.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,        // parse / usage errors
  kExitComputation = 2,  // computation failed (precision, internal)
  kExitCheckFailed = 3,  // a verification check did not pass
};

struct CommandOptions {
  OutputFormat format = OutputFormat::Text;
  SignatureOptions sig;
  std::optional<long> window;  // widens the cp2 search window
  std::vector<long> primes;    // sigma_p display columns; empty = default
  std::string golden_path;     // alternate golden table; empty = built-in
};

int cmd_invariants(const std::string& expr, const CommandOptions& opts,
                   std::ostream& out, std::ostream& err);
int cmd_cp2(const std::string& expr, const CommandOptions& opts,
            std::ostream& out, std::ostream& err);
int cmd_tables(const std::string& kind, long max, const CommandOptions& opts,
               std::ostream& out, std::ostream& err);
int cmd_paper_check(const CommandOptions& opts, std::ostream& out,
                    std::ostream& err);

}  // namespace cp2
