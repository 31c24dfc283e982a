// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metatest/cli.hpp"
#include "metatest/corpus.hpp"
#include "metatest/harness.hpp"
#include "metatest/static_oracle.hpp"

using namespace metatest;
namespace mc = metatest::corpus;
using clock_type = std::chrono::steady_clock;

namespace {

// Thresholds.
constexpr double kOracleEquivalenceBudgetSeconds = 1.0;
constexpr double kSuiteBudgetSeconds = 5.0;
constexpr double kOverheadRatioBound = 10.0;
constexpr std::int64_t kOverheadIterations = 1'000'000;
constexpr std::int64_t kDenoteRange = 1'000'000;

struct criterion_result {
  bool passed = true;
  std::vector<std::string> failures;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <class Check>
std::optional<oracle_violation> violation_of(Check&& check) {
  try {
    check();
  } catch (const oracle_violation& v) {
    return v;
  }
  return std::nullopt;
}

struct process_result {
  int exit_code = -1;
  std::string out;
};

process_result run_process(const std::string& command) {
  process_result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// ---------------------------------------------------------------------------

criterion_result oracle_equivalence() {
  criterion_result r;
  const auto start = clock_type::now();
  const auto table = []<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<std::int64_t, sizeof...(I)>{
        static_factorial(static_cast<static_int>(I))...};
  }(std::make_index_sequence<max_factorial_input + 1>{});
  for (std::int64_t n = 0; n <= max_factorial_input; ++n) {
    const auto expected = table[static_cast<std::size_t>(n)];
    const auto actual = mc::factorial(n);
    r.require(expected == actual, "n=" + std::to_string(n) + " static=" +
                                      std::to_string(expected) + " runtime=" +
                                      std::to_string(actual));
  }
  const double elapsed = seconds_since(start);
  r.require(elapsed < kOracleEquivalenceBudgetSeconds,
            "took " + std::to_string(elapsed) + " s");
  r.detail = "n in 0..20, " + std::to_string(elapsed * 1e3) + " ms";
  return r;
}

criterion_result paper_scenarios() {
  criterion_result r;
  auto factorial_case = violation_of([] { check_return<6, mc::factorial_oracle>(mc::factorial); });
  r.require(!factorial_case, "factorial check at 6: " +
                                 (factorial_case ? factorial_case->render() : std::string()));

  auto inc_case = violation_of([] { check_out_param<5, mc::inc_oracle>(mc::inc); });
  r.require(!inc_case, "inc check at 5: " + (inc_case ? inc_case->render() : std::string()));

  auto real_case = violation_of(
      [] { check_real_return<static_real{314, -2}, mc::scale10_oracle, 0.0>(mc::scale10); });
  r.require(!real_case, "scale10 check at (314,-2) tol 0: " +
                            (real_case ? real_case->render() : std::string()));
  r.detail = "factorial(6), inc(5), scale10(3.14) at tolerance 0";
  return r;
}

criterion_result violation_firing() {
  criterion_result r;
  auto v = violation_of([] { checked_int<42, equal_to>{41}; });
  r.require(v.has_value(), "42 vs 41 adopted without violation");
  if (v) {
    r.require(v->expected() == "42" && v->actual() == "41",
              "violation payload: " + v->render());
  }

  registry full;
  mc::register_suite(full);
  const auto report = run_tests(full);
  std::size_t caught = 0;
  for (const auto& m : mc::mutants()) {
    bool found = false;
    for (const auto& res : report.results) {
      if (res.name == m.test_name) {
        found = true;
        const bool ok = res.result == outcome::pass && res.violation.has_value();
        caught += ok ? 1 : 0;
        r.require(ok, "mutant " + std::string(m.name) + " not caught at " +
                          std::string(m.caught_at));
      }
    }
    r.require(found, "mutant test missing: " + std::string(m.test_name));
  }
  r.require(mc::mutants().size() >= 3, "fewer than 3 mutants");

  registry correct;
  mc::register_suite(correct, {.include_mutants = false});
  const auto clean = run_tests(correct);
  std::size_t false_positives = 0;
  for (const auto& res : clean.results) {
    if (res.result != outcome::pass) {
      ++false_positives;
      r.require(false, "false positive: " + res.name);
    }
  }
  r.detail = std::to_string(caught) + "/" + std::to_string(mc::mutants().size()) +
             " mutants caught, " + std::to_string(false_positives) + " false positives over " +
             std::to_string(clean.total()) + " domain points";
  return r;
}

criterion_result static_phase_contract() {
  criterion_result r;

  // Structural: the oracle value is part of the result type, so it is fixed
  // at compile time.
  static_assert(std::is_same_v<decltype(check_return<6, mc::factorial_oracle>(mc::factorial)),
                               checked_int<720>>);
  static_assert(std::is_same_v<decltype(check_out_param<5, mc::inc_oracle>(mc::inc)),
                               checked_int<6>>);
  static_assert(
      std::is_same_v<decltype(check_real_return<static_real{314, -2}, mc::scale10_oracle>(
                         mc::scale10)),
                     checked_real<static_real{314, -1}>>);
  static_assert(std::is_same_v<decltype(check_return<20, mc::factorial_oracle>(mc::factorial)),
                               checked_int<2432902008176640000>>);

  // Behavioural: exactly one call per test.
  registry reg;
  mc::register_suite(reg);
  for (const auto& test : reg.tests()) {
    mc::reset_counters();
    (void)violation_of(test.thunk);
    r.require(mc::counters().total() == 1,
              test.name + " made " + std::to_string(mc::counters().total()) + " calls");
  }

  mc::reset_counters();
  const auto full = run_tests(reg);
  r.require(mc::counters().total() == static_cast<std::int64_t>(full.total()),
            "suite calls != tests");

  mc::reset_counters();
  std::ostringstream out, err;
  const std::vector<std::string> list_args{"list"};
  const int code = cli::main(list_args, out, err);
  r.require(code == cli::exit_ok, "list exit code " + std::to_string(code));
  r.require(mc::counters().total() == 0,
            "list mode made " + std::to_string(mc::counters().total()) + " calls");

  r.detail = std::to_string(reg.size()) + " tests, one call each; list mode 0 calls";
  return r;
}

template <std::size_t>
struct element {};

template <std::size_t N>
constexpr bool seq_length_matches() {
  return []<std::size_t... I>(std::index_sequence<I...>) {
    return seq_length_v<seq_build_t<element<I>...>> == static_cast<static_int>(sizeof...(I));
  }(std::make_index_sequence<N>{});
}

template <class T, class S>
void check_widened_pair(criterion_result& r, T small, S large) {
  constexpr std::size_t wider = sizeof(T) < sizeof(S) ? sizeof(S) : sizeof(T);
  using result = decltype(widened_max(small, large));
  r.require(sizeof(result) == wider, "width of widened_max result");
  if constexpr (sizeof(T) >= sizeof(S)) {
    r.require(std::is_same_v<result, T>, "first operand kind kept when not narrower");
  } else {
    r.require(std::is_same_v<result, S>, "wider operand kind chosen");
  }
  r.require(widened_max(small, large) == static_cast<result>(large), "greater value (x<y)");
  r.require(widened_max(large, small) == static_cast<decltype(widened_max(large, small))>(large),
            "greater value (x>y)");
}

criterion_result typelist_and_combinators() {
  criterion_result r;
  const std::array<bool, 9> lengths{seq_length_matches<0>(), seq_length_matches<1>(),
                                    seq_length_matches<2>(), seq_length_matches<3>(),
                                    seq_length_matches<4>(), seq_length_matches<5>(),
                                    seq_length_matches<6>(), seq_length_matches<7>(),
                                    seq_length_matches<8>()};
  for (std::size_t n = 0; n < lengths.size(); ++n) {
    r.require(lengths[n], "seq_length mismatch at length " + std::to_string(n));
  }

  constexpr std::array<int, 4> selected{static_select(true, 1, 2), static_select(false, 1, 2),
                                        static_select(true, 2, 1), static_select(false, 2, 1)};
  const std::array<int, 4> runtime{true ? 1 : 2, false ? 1 : 2, true ? 2 : 1, false ? 2 : 1};
  r.require(selected == runtime, "static_select disagrees with runtime conditional");
  r.require(std::is_same_v<select_t<true, int, double>, int> &&
                std::is_same_v<select_t<false, int, double>, double> &&
                std::is_same_v<select_t<true, double, int>, double> &&
                std::is_same_v<select_t<false, double, int>, int>,
            "select kind level");

  // Widths 1, 4, 8.
  check_widened_pair(r, std::int8_t{3}, std::int8_t{5});
  check_widened_pair(r, std::int8_t{3}, std::int32_t{5});
  check_widened_pair(r, std::int8_t{3}, 5.5);
  check_widened_pair(r, std::int32_t{3}, std::int8_t{5});
  check_widened_pair(r, std::int32_t{3}, std::int32_t{5});
  check_widened_pair(r, std::int32_t{3}, 5.5);
  check_widened_pair(r, 3.5, std::int8_t{5});
  check_widened_pair(r, 3.5, std::int32_t{5});
  check_widened_pair(r, 3.5, 5.5);

  r.detail = "lengths 0..8, 4 select cases, 3x3 width grid";
  return r;
}

template <std::size_t... I>
std::vector<std::string> scale10_exact_failures(std::index_sequence<I...>) {
  std::vector<std::string> failures;
  (
      [&] {
        auto v = violation_of([] {
          check_real_return<mc::scale10_domain[I], mc::scale10_oracle, 0.0>(mc::scale10);
        });
        if (v) {
          failures.push_back(mc::test_name("scale10", mc::scale10_domain[I]) + ": " + v->render());
        }
      }(),
      ...);
  return failures;
}

criterion_result real_encoding() {
  criterion_result r;
  std::int64_t mismatches = 0;
  for (std::int64_t a = -kDenoteRange; a <= kDenoteRange; ++a) {
    if (denote(static_real{a, 0}) != static_cast<double>(a)) {
      ++mismatches;
    }
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " denote(a,0) mismatches");

  constexpr double denoted = denote(static_real{314, -2});
  r.require(std::bit_cast<std::uint64_t>(denoted) == std::bit_cast<std::uint64_t>(3.14),
            "denote(314,-2) is not bit-identical to 3.14");

  for (const auto& failure :
       scale10_exact_failures(std::make_index_sequence<mc::scale10_domain.size()>{})) {
    r.require(false, "tolerance-0 adoption failed for " + failure);
  }
  r.detail = "a in [-1e6, 1e6] exhaustive, denote(314,-2) bit-exact, scale10 domain at tol 0";
  return r;
}

criterion_result runner_contract() {
  criterion_result r;
  const std::string cli = METATEST_CLI_PATH;
  const std::string regressed = METATEST_REGRESSED_CLI_PATH;

  const auto start = clock_type::now();
  const auto full = run_process(cli + " run");
  const double elapsed = seconds_since(start);
  r.require(full.exit_code == cli::exit_ok, "full suite exit " + std::to_string(full.exit_code));
  r.require(elapsed < kSuiteBudgetSeconds, "full suite took " + std::to_string(elapsed) + " s");

  const auto broken = run_process(regressed + " run");
  r.require(broken.exit_code == cli::exit_failure,
            "seeded regression exit " + std::to_string(broken.exit_code));

  const auto usage = run_process(cli + " run --format xml 2>/dev/null");
  r.require(usage.exit_code == cli::exit_usage, "bad flag exit " + std::to_string(usage.exit_code));

  const auto json = run_process(cli + " run --format json");
  r.require(json.exit_code == cli::exit_ok, "json run exit " + std::to_string(json.exit_code));
  try {
    const auto doc = nlohmann::json::parse(json.out);
    std::size_t pass = 0, fail = 0, error = 0;
    for (const auto& t : doc.at("tests")) {
      for (const char* field : {"name", "outcome", "expected", "actual", "relation", "site", "millis"}) {
        r.require(t.contains(field), std::string("missing field ") + field);
      }
      const auto o = t.at("outcome").get<std::string>();
      pass += o == "pass";
      fail += o == "fail";
      error += o == "error";
    }
    const auto& s = doc.at("summary");
    r.require(s.at("total").get<std::size_t>() == doc.at("tests").size(), "summary total");
    r.require(s.at("pass").get<std::size_t>() == pass, "summary pass");
    r.require(s.at("fail").get<std::size_t>() == fail, "summary fail");
    r.require(s.at("error").get<std::size_t>() == error, "summary error");
  } catch (const std::exception& e) {
    r.require(false, std::string("json: ") + e.what());
  }
  r.detail = "exit 0/1/2 as specified, suite " + std::to_string(elapsed * 1e3) + " ms";
  return r;
}

[[gnu::noinline]] void bare_mismatch(std::int64_t value) {
  throw std::runtime_error("mismatch " + std::to_string(value));
}

criterion_result overhead_smoke() {
  criterion_result r;
  volatile std::int64_t seed = 42;
  const std::int64_t fill = seed;
  const std::vector<std::int64_t> values(static_cast<std::size_t>(kOverheadIterations), fill);

  auto best_of = [](auto&& body) {
    double best = 1e9;
    for (int round = 0; round < 7; ++round) {
      const auto start = clock_type::now();
      body();
      best = std::min(best, seconds_since(start));
    }
    return best;
  };

  volatile std::int64_t sink = 0;
  const double bare = best_of([&] {
    std::int64_t sum = 0;
    for (const std::int64_t v : values) {
      if (v != 42) {
        bare_mismatch(v);
      }
      sum += v;
    }
    sink = sum;
  });
  const double checked = best_of([&] {
    std::int64_t sum = 0;
    for (const std::int64_t v : values) {
      sum += checked_int<42>{v, "overhead"}.get_value();
    }
    sink = sum;
  });
  (void)sink;

  const double ratio = checked / bare;
  r.require(ratio <= kOverheadRatioBound, "ratio " + std::to_string(ratio));
  r.detail = "bare " + std::to_string(bare * 1e3) + " ms, checked " +
             std::to_string(checked * 1e3) + " ms, ratio " + std::to_string(ratio);
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<criterion_result()>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 paper scenario reproduction", paper_scenarios},
      {"3 violation firing", violation_firing},
      {"4 static-phase contract", static_phase_contract},
      {"5 typelist and combinators", typelist_and_combinators},
      {"6 real encoding exactness", real_encoding},
      {"7 runner contract", runner_contract},
      {"8 overhead smoke check", overhead_smoke},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    criterion_result result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.require(false, std::string("unexpected exception: ") + e.what());
    }
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << name;
    if (!result.detail.empty()) {
      std::cout << " (" << result.detail << ")";
    }
    std::cout << '\n';
    for (const auto& f : result.failures) {
      std::cout << "       - " << f << '\n';
    }
    failed += result.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
