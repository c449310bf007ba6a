#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace berndt::cli {

enum class Command { Tables, Sum, Integral, Relations, Verify, Conjecture };
enum class Format { Json, Text };

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
  Command command = Command::Verify;
  long prec = 200;
  Format format = Format::Json;
  // Depth bounds; each command falls back to its own default when unset.
  std::optional<int> pmax;
  std::optional<int> mmax;
  // verify: include wall-clock timings (makes output non-reproducible).
  bool timings = false;

  std::string what = "all";  // tables
  std::string family;        // sum
  int exponent = 0;
  bool numeric = false;      // sum, integral
  std::string kind;          // integral
  int p = 0;
  std::string which;         // relations
  int a = 0;
};

// Result of command-line parsing: a config to run, or an exit code when
// parsing already finished (help output, or 2 for a malformed command line).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                std::ostream& err);

// Runs one command. Reports go to out, diagnostics and progress to err.
// Returns 0 on success, 1 when a checked identity fails, 2 on invalid config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class Status { ExactPass, NumericPass, Fail };
const char* status_name(Status status);

struct VerificationEntry {
  std::string identity_id;
  std::string anchor;
  Status status = Status::Fail;
  std::string delta;  // decimal; "0" for exact comparisons
  double runtime_ms = 0;
};

struct SuiteOptions {
  long prec = 200;
  int pmax = 8;  // conjecture depth
  int mmax = 6;  // grading depth
};

// One verify-suite item. The check returns its status and delta.
struct SuiteItem {
  std::string identity_id;
  std::string anchor;
  std::function<std::pair<Status, std::string>(const SuiteOptions&)> check;
};

std::vector<SuiteItem> verification_suite();

// Runs the items on a worker pool; the result order is the suite order.
// progress receives one line per finished item.
std::vector<VerificationEntry> run_suite(const std::vector<SuiteItem>& items,
                                         const SuiteOptions& options, std::ostream* progress);

}  // namespace berndt::cli
