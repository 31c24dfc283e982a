#pragma once

// Functions under test, their static oracles, and deliberately broken
// variants used to show that the oracles catch defects.

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>

#include "metatest/checked_value.hpp"
#include "metatest/harness.hpp"
#include "metatest/static_oracle.hpp"

namespace metatest::corpus {

/// Iterative n! for 0 <= n <= 20; throws std::domain_error otherwise.
std::int64_t factorial(std::int64_t n);

/// Increments in place.
void inc(std::int64_t& i);

double scale10(double d);

// Mutants.

/// Loop bound `i < n` instead of `i <= n`.
std::int64_t factorial_loop_bound(std::int64_t n);
/// Decrements instead of incrementing.
void inc_decrement(std::int64_t& i);
/// Multiplies by 100 instead of 10.
double scale10_times100(double d);

// Oracles.

inline constexpr auto factorial_oracle = [](static_int n) consteval { return static_factorial(n); };
inline constexpr auto inc_oracle = [](static_int n) consteval { return n + 1; };
inline constexpr auto scale10_oracle = [](static_real r) consteval {
  return static_real{r.significand, r.exponent + 1};
};

// Declared domains.

inline constexpr auto factorial_domain = [] {
  std::array<static_int, max_factorial_input + 1> domain{};
  for (static_int i = 0; i <= max_factorial_input; ++i) {
    domain[static_cast<std::size_t>(i)] = i;
  }
  return domain;
}();
inline constexpr std::array<static_int, 3> inc_domain{-1, 0, 5};
inline constexpr std::array<static_real, 4> scale10_domain{
    static_real{0, 0}, static_real{1, 0}, static_real{314, -2}, static_real{5, 0}};

/// Relative tolerance used when registering the scale10 tests. Both the
/// function under test and denote() round once, so results may differ by one
/// ulp (3.14 * 10 is 31.400000000000002, not 31.4).
inline constexpr double scale10_tolerance = 2 * std::numeric_limits<double>::epsilon();

/// Number of times each function has been invoked since the last reset.
struct call_counters {
  std::int64_t factorial = 0;
  std::int64_t inc = 0;
  std::int64_t scale10 = 0;
  std::int64_t factorial_loop_bound = 0;
  std::int64_t inc_decrement = 0;
  std::int64_t scale10_times100 = 0;

  std::int64_t total() const noexcept {
    return factorial + inc + scale10 + factorial_loop_bound + inc_decrement + scale10_times100;
  }
};

// Not synchronized; the runner is sequential.
call_counters& counters() noexcept;
void reset_counters() noexcept;

struct mutant_info {
  std::string_view name;
  std::string_view target;
  /// Domain point on which the mutant is known to disagree with its oracle.
  std::string_view caught_at;
  std::string_view test_name;
};

std::span<const mutant_info> mutants() noexcept;

/// Test name for a domain point, e.g. "factorial/6" or "scale10/314e-2".
std::string test_name(std::string_view entry, static_int input);
std::string test_name(std::string_view entry, static_real input);

struct suite_options {
  bool include_mutants = true;
};

/// Registers one test per domain point of every corpus function, followed by
/// one expected-to-fail test per mutant.
void register_suite(registry& reg, suite_options options = {});

}  // namespace metatest::corpus
