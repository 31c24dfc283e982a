#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "metatest/harness.hpp"

namespace metatest::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

enum class mode { list, run };
enum class report_format { text, json };

struct run_config {
  cli::mode mode = mode::run;
  std::optional<std::string> filter;
  report_format format = report_format::text;
  bool include_mutants = true;
};

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the help text.
class help_requested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name):
///   list|run [--filter <substring>] [--format text|json] [--no-mutants]
run_config parse_args(std::span<const std::string> args);

/// Text: one `PASS|FAIL|ERROR <name> [<detail>]` line per test, then
/// `total=<n> pass=<p> fail=<f> error=<e>`. JSON: `{"tests": [...], "summary": {...}}`.
std::string emit_report(const test_report& report, report_format format);

/// Names (and tags) of the selected tests. Never runs a test.
std::string emit_listing(const registry& reg, std::optional<std::string_view> filter,
                         report_format format);

/// Executes a parsed configuration against `reg`; returns the exit code.
int execute(const run_config& config, const registry& reg, std::ostream& out);

/// Full entry point over the built-in corpus.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace metatest::cli
