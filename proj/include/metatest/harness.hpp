#pragma once

#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "metatest/checked_value.hpp"

namespace metatest {

/// Violation sites produced by the check wrappers.
inline constexpr std::string_view input_guard_site = "input-guard";
inline constexpr std::string_view result_check_site = "result-check";

// ---------------------------------------------------------------------------
// Check wrappers
//
// The oracle is a template argument, so `Oracle(Input)` is a constant
// expression: the expected value is fixed by the compiler before the
// function under test can run. Oracles may be consteval.
// ---------------------------------------------------------------------------

/// Return-value check: adopt the input, run `fut` on it, adopt the result
/// against `Oracle(Input)`.
///
/// `runtime_input` defaults to the static input; passing something else
/// exercises the input guard.
template <static_int Input, auto Oracle, class Fut>
  requires std::invocable<Fut&, std::int64_t>
checked_int<Oracle(Input)> check_return(Fut&& fut, std::int64_t runtime_input = Input) {
  const checked_int<Input> input{runtime_input, input_guard_site};
  const std::int64_t result = std::invoke(fut, input.get_value());
  return checked_int<Oracle(Input)>{result, result_check_site};
}

/// Output-parameter check: `fut` mutates a local copy of the adopted input,
/// which is then adopted against `Oracle(Input)`.
template <static_int Input, auto Oracle, class Fut>
  requires std::invocable<Fut&, std::int64_t&>
checked_int<Oracle(Input)> check_out_param(Fut&& fut, std::int64_t runtime_input = Input) {
  const checked_int<Input> input{runtime_input, input_guard_site};
  std::int64_t local = input.get_value();
  std::invoke(fut, local);
  return checked_int<Oracle(Input)>{local, result_check_site};
}

/// Real-valued return check under a relative tolerance.
template <static_real Input, auto Oracle, double Tolerance = 0.0, class Fut>
  requires std::invocable<Fut&, double>
checked_real<Oracle(Input), Tolerance> check_real_return(Fut&& fut) {
  constexpr double input = denote(Input);
  const double result = std::invoke(fut, input);
  return checked_real<Oracle(Input), Tolerance>{result, result_check_site};
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// What a test's thunk is supposed to do. Mutation tests expect a violation.
enum class expectation { pass, violation };

struct test_case {
  std::string name;
  std::function<void()> thunk;
  std::vector<std::string> tags;
  expectation expect = expectation::pass;
};

class duplicate_test_name : public std::invalid_argument {
public:
  explicit duplicate_test_name(const std::string& name)
      : std::invalid_argument("duplicate test name: " + name) {}
};

/// Ordered collection of uniquely named tests.
class registry {
public:
  registry& add(test_case test);
  registry& add(std::string name, std::function<void()> thunk,
                std::vector<std::string> tags = {}, expectation expect = expectation::pass);

  std::span<const test_case> tests() const noexcept { return tests_; }
  std::size_t size() const noexcept { return tests_.size(); }
  bool contains(std::string_view name) const;

  /// Tests whose name contains `filter` (case-sensitive), in registration
  /// order. No filter selects everything.
  std::vector<const test_case*> select(std::optional<std::string_view> filter) const;

private:
  std::vector<test_case> tests_;
  std::unordered_set<std::string> names_;
};

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

enum class outcome { pass, fail, error };

std::string_view to_string(outcome o) noexcept;

struct test_result {
  std::string name;
  outcome result = outcome::pass;
  expectation expect = expectation::pass;
  // Set on a failed check, and on a passing mutation test (the caught
  // violation).
  std::optional<oracle_violation> violation;
  // Set on outcome::error.
  std::string error_message;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct test_report {
  std::vector<test_result> results;

  std::size_t total() const noexcept { return results.size(); }
  std::size_t count(outcome o) const noexcept;
  bool ok() const noexcept { return count(outcome::fail) == 0 && count(outcome::error) == 0; }
};

/// Runs the selected tests once each, in registration order. A failing or
/// throwing test is recorded and the run continues.
test_report run_tests(const registry& reg, std::optional<std::string_view> filter = std::nullopt);

}  // namespace metatest
