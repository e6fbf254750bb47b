#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eispole/rational.hpp"
#include "eispole/rootsys.hpp"
#include "eispole/weylsym.hpp"

namespace eispole::cli {

enum class Format { Text, Json, Latex };

enum ExitStatus : int { kOk = 0, kVerificationFailure = 1, kUsage = 2 };

struct Request {
  /// Empty means no case computation was requested.
  std::vector<RootSystemKind> kinds;
  /// nullopt means every node.
  std::optional<int> node;
  Format format = Format::Text;
  Rational rescale = Rational(1);
  bool verify = false;
  bool sweep = false;
  std::optional<std::string> corpus;
  std::size_t weyl_cap = kDefaultWeylCap;
  int max_rank = kDefaultMaxRank;
};

/// Thrown for anything that should end in exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// argv[0] is the program name. Throws UsageError; `--help` is reported
/// through the returned status instead of a Request.
struct ParseResult {
  std::optional<Request> request;
  int status = kOk;
  std::string message;
};
ParseResult parse_arguments(const std::vector<std::string>& argv);

/// Executes a request, writing the report to out and diagnostics to err.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// parse_arguments + run.
int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace eispole::cli
