#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monideal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,       // bad arguments or unparsable literal
  kDomainError = 2,      // valid input outside an operation's domain
  kVerifyMismatch = 3,   // an oracle disagreed with the production path
};

struct Command {
  std::string verb;
  std::string ideal;     // literal, or "-" for stdin
  std::string monomial;  // `member` only
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> max_k;  // --K
  bool json = false;
  bool verify = false;
  bool unicode = false;
};

/// Verbs accepted by the tool, in help order.
const std::vector<std::string>& verbs();

/// Runs a parsed command. Output is deterministic for identical input.
int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monideal::cli
