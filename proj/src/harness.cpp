#include "metatest/harness.hpp"

#include <algorithm>
#include <exception>
#include <utility>

namespace metatest {

registry& registry::add(test_case test) {
  if (names_.contains(test.name)) {
    throw duplicate_test_name(test.name);
  }
  names_.insert(test.name);
  tests_.push_back(std::move(test));
  return *this;
}

registry& registry::add(std::string name, std::function<void()> thunk,
                        std::vector<std::string> tags, expectation expect) {
  return add(test_case{std::move(name), std::move(thunk), std::move(tags), expect});
}

bool registry::contains(std::string_view name) const { return names_.contains(std::string(name)); }

std::vector<const test_case*> registry::select(std::optional<std::string_view> filter) const {
  std::vector<const test_case*> selected;
  for (const auto& test : tests_) {
    if (!filter || test.name.find(*filter) != std::string::npos) {
      selected.push_back(&test);
    }
  }
  return selected;
}

std::string_view to_string(outcome o) noexcept {
  switch (o) {
    case outcome::pass:
      return "pass";
    case outcome::fail:
      return "fail";
    case outcome::error:
      return "error";
  }
  return "error";
}

std::size_t test_report::count(outcome o) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [o](const test_result& r) { return r.result == o; }));
}

namespace {

test_result execute(const test_case& test) {
  test_result result;
  result.name = test.name;
  result.expect = test.expect;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!test.thunk) {
      throw std::logic_error("test has no body");
    }
    test.thunk();
    if (test.expect == expectation::violation) {
      result.result = outcome::fail;
      result.violation.emplace("oracle violation", "none", "raises", test.name);
    }
  } catch (const oracle_violation& v) {
    result.result = test.expect == expectation::violation ? outcome::pass : outcome::fail;
    result.violation = v;
  } catch (const std::exception& e) {
    result.result = outcome::error;
    result.error_message = e.what();
  } catch (...) {
    result.result = outcome::error;
    result.error_message = "unknown exception";
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

test_report run_tests(const registry& reg, std::optional<std::string_view> filter) {
  test_report report;
  for (const test_case* test : reg.select(filter)) {
    report.results.push_back(execute(*test));
  }
  return report;
}

}  // namespace metatest
