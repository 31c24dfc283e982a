#include "metatest/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metatest/corpus.hpp"

namespace metatest::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view status_word(outcome o) {
  switch (o) {
    case outcome::pass:
      return "PASS";
    case outcome::fail:
      return "FAIL";
    case outcome::error:
      return "ERROR";
  }
  return "ERROR";
}

void add_common_options(CLI::App& cmd, run_config& config, std::string& format) {
  cmd.add_option("--filter", config.filter, "Only tests whose name contains this substring");
  cmd.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  cmd.add_flag_callback(
      "--no-mutants", [&config] { config.include_mutants = false; },
      "Skip the expected-to-fail mutation tests");
}

ordered_json optional_text(bool present, const std::string& text) {
  return present ? ordered_json(text) : ordered_json(nullptr);
}

}  // namespace

run_config parse_args(std::span<const std::string> args) {
  run_config config;
  std::string format = "text";

  CLI::App app{"Runs the oracle-checked corpus tests", "metatest"};
  app.require_subcommand(1, 1);
  CLI::App* list_cmd = app.add_subcommand("list", "List tests without running them");
  CLI::App* run_cmd = app.add_subcommand("run", "Run tests and report results");
  add_common_options(*list_cmd, config, format);
  add_common_options(*run_cmd, config, format);

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw help_requested(target->help());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  config.mode = list_cmd->parsed() ? mode::list : mode::run;
  config.format = format == "json" ? report_format::json : report_format::text;
  return config;
}

std::string emit_report(const test_report& report, report_format format) {
  const std::size_t pass = report.count(outcome::pass);
  const std::size_t fail = report.count(outcome::fail);
  const std::size_t error = report.count(outcome::error);

  if (format == report_format::text) {
    std::ostringstream out;
    for (const auto& r : report.results) {
      out << status_word(r.result) << ' ' << r.name;
      if (r.result == outcome::error) {
        out << " [" << r.error_message << ']';
      } else if (r.violation) {
        out << " [" << r.violation->render() << ']';
      }
      out << '\n';
    }
    out << "total=" << report.total() << " pass=" << pass << " fail=" << fail
        << " error=" << error << '\n';
    return out.str();
  }

  ordered_json tests = ordered_json::array();
  for (const auto& r : report.results) {
    const bool has_violation = r.violation.has_value();
    ordered_json entry;
    entry["name"] = r.name;
    entry["outcome"] = std::string(to_string(r.result));
    if (r.result == outcome::error) {
      entry["expected"] = nullptr;
      entry["actual"] = r.error_message;
      entry["relation"] = nullptr;
      entry["site"] = nullptr;
    } else {
      entry["expected"] = optional_text(has_violation, has_violation ? r.violation->expected() : "");
      entry["actual"] = optional_text(has_violation, has_violation ? r.violation->actual() : "");
      entry["relation"] = optional_text(has_violation, has_violation ? r.violation->relation() : "");
      entry["site"] = optional_text(has_violation, has_violation ? r.violation->site() : "");
    }
    entry["millis"] = r.elapsed.count();
    tests.push_back(std::move(entry));
  }

  ordered_json doc;
  doc["tests"] = std::move(tests);
  doc["summary"] = {{"total", report.total()}, {"pass", pass}, {"fail", fail}, {"error", error}};
  return doc.dump(2) + "\n";
}

std::string emit_listing(const registry& reg, std::optional<std::string_view> filter,
                         report_format format) {
  const auto selected = reg.select(filter);
  if (format == report_format::text) {
    std::ostringstream out;
    for (const test_case* test : selected) {
      out << test->name;
      if (!test->tags.empty()) {
        out << " [";
        for (std::size_t i = 0; i < test->tags.size(); ++i) {
          out << (i ? "," : "") << test->tags[i];
        }
        out << ']';
      }
      out << '\n';
    }
    return out.str();
  }

  ordered_json tests = ordered_json::array();
  for (const test_case* test : selected) {
    tests.push_back({{"name", test->name},
                     {"tags", test->tags},
                     {"expect", test->expect == expectation::violation ? "violation" : "pass"}});
  }
  ordered_json doc;
  doc["tests"] = std::move(tests);
  return doc.dump(2) + "\n";
}

int execute(const run_config& config, const registry& reg, std::ostream& out) {
  std::optional<std::string_view> filter;
  if (config.filter) {
    filter = *config.filter;
  }
  if (config.mode == mode::list) {
    out << emit_listing(reg, filter, config.format);
    return exit_ok;
  }
  const test_report report = run_tests(reg, filter);
  out << emit_report(report, config.format);
  return report.ok() ? exit_ok : exit_failure;
}

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  run_config config;
  try {
    config = parse_args(args);
  } catch (const help_requested& help) {
    out << help.what();
    return exit_ok;
  } catch (const usage_error& e) {
    err << "metatest: " << e.what() << "\nRun with --help for more information.\n";
    return exit_usage;
  }

  registry reg;
  corpus::register_suite(reg, corpus::suite_options{.include_mutants = config.include_mutants});
  return execute(config, reg, out);
}

}  // namespace metatest::cli
