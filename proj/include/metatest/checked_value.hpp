#pragma once

#include <concepts>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>
#include <string_view>

#include "metatest/static_oracle.hpp"

namespace metatest {

/// Raised when a runtime value disagrees with its static expectation.
///
/// Renders as `expected <E> <relation> actual <A> at <site>`; the harness
/// reports use that text verbatim.
class oracle_violation : public std::exception {
public:
  oracle_violation(std::string expected, std::string actual, std::string relation,
                   std::string site);

  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }
  const std::string& relation() const noexcept { return relation_; }
  const std::string& site() const noexcept { return site_; }

  const std::string& render() const noexcept { return rendered_; }
  const char* what() const noexcept override { return rendered_.c_str(); }

private:
  std::string expected_;
  std::string actual_;
  std::string relation_;
  std::string site_;
  std::string rendered_;
};

/// Shortest decimal text that reads back to the same value.
std::string render_value(std::int64_t value);
std::string render_value(double value);

// ---------------------------------------------------------------------------
// Relations, always applied as holds(expected, actual)
// ---------------------------------------------------------------------------

template <class R>
concept int_relation = std::default_initializable<R> && requires(const R rel, std::int64_t v) {
  { rel(v, v) } -> std::convertible_to<bool>;
  { R::name } -> std::convertible_to<std::string_view>;
};

struct equal_to {
  static constexpr std::string_view name = "==";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected == actual;
  }
};

struct not_equal_to {
  static constexpr std::string_view name = "!=";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected != actual;
  }
};

struct less {
  static constexpr std::string_view name = "<";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected < actual;
  }
};

struct less_equal {
  static constexpr std::string_view name = "<=";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected <= actual;
  }
};

struct greater {
  static constexpr std::string_view name = ">";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected > actual;
  }
};

struct greater_equal {
  static constexpr std::string_view name = ">=";
  constexpr bool operator()(std::int64_t expected, std::int64_t actual) const noexcept {
    return expected >= actual;
  }
};

namespace detail {

[[noreturn]] void throw_int_violation(std::int64_t expected, std::int64_t actual,
                                      std::string_view relation, std::string_view site);

[[noreturn]] void throw_real_violation(double expected, double actual, double tolerance,
                                       std::string_view site);

}  // namespace detail

// ---------------------------------------------------------------------------
// Checked integers
// ---------------------------------------------------------------------------

/// Runtime integer that only exists if `Relation{}(Expected, value)` held
/// when it was built. Construction is implicit on purpose: passing a plain
/// integer where a checked_int is expected performs the check.
template <static_int Expected, int_relation Relation = equal_to>
class checked_int {
public:
  constexpr checked_int(std::int64_t value, std::string_view site = "checked_int")
      : value_(value) {
    if (!Relation{}(Expected, value)) {
      detail::throw_int_violation(Expected, value, Relation::name, site);
    }
  }

  constexpr std::int64_t get_value() const noexcept { return value_; }

private:
  std::int64_t value_;
};

// ---------------------------------------------------------------------------
// Static reals
// ---------------------------------------------------------------------------

/// Real number as significand * 10^exponent, usable as a template argument.
/// Representations are not unique: {10, 0} and {1, 1} denote the same value.
struct static_real {
  std::int64_t significand = 0;
  std::int64_t exponent = 0;

  friend constexpr bool operator==(const static_real&, const static_real&) = default;
};

namespace detail {

// Powers of ten that are exact in binary64.
inline constexpr int max_exact_pow10 = 22;
inline constexpr std::int64_t max_exact_integer = std::int64_t{1} << 53;

constexpr double exact_pow10(std::int64_t k) {
  double p = 1.0;
  for (std::int64_t i = 0; i < k; ++i) {
    p *= 10.0;
  }
  return p;
}

constexpr std::int64_t abs_value(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace detail

/// Runtime value of a static real.
///
/// When the significand and the power of ten are both exact doubles the
/// result is a single correctly rounded multiply or divide, so
/// `denote({314, -2}) == 3.14`. Otherwise the value is scaled one decade at a
/// time.
constexpr double denote(static_real r) {
  const std::int64_t s = r.significand;
  const std::int64_t e = r.exponent;
  if (s == 0) {
    return 0.0;
  }
  const bool exact_significand = s != std::numeric_limits<std::int64_t>::min() &&
                                 detail::abs_value(s) <= detail::max_exact_integer;
  if (exact_significand && e >= -detail::max_exact_pow10 && e <= detail::max_exact_pow10) {
    const double scale = detail::exact_pow10(detail::abs_value(e));
    return e >= 0 ? static_cast<double>(s) * scale : static_cast<double>(s) / scale;
  }
  double value = static_cast<double>(s);
  for (std::int64_t i = 0; i < e; ++i) {
    value *= 10.0;
  }
  for (std::int64_t i = 0; i > e; --i) {
    value /= 10.0;
  }
  return value;
}

/// True iff `actual` lies within `tolerance * max(1, |expected|)` of
/// `expected`. A zero tolerance is exact equality.
constexpr bool within_tolerance(double expected, double actual, double tolerance) {
  if (expected == actual) {
    return true;
  }
  const double diff = expected > actual ? expected - actual : actual - expected;
  const double magnitude = expected < 0 ? -expected : expected;
  return diff <= tolerance * (magnitude > 1.0 ? magnitude : 1.0);
}

/// Rendered name of the tolerance relation: "==" when exact.
std::string tolerance_relation_name(double tolerance);

/// Runtime real checked against `denote(Expected)` under a relative
/// tolerance. The stored value is the exact double that was adopted.
template <static_real Expected, double Tolerance = 0.0>
  requires(Tolerance >= 0.0)
class checked_real {
public:
  constexpr checked_real(double value, std::string_view site = "checked_real")
      : value_(value) {
    if (!within_tolerance(expected_value, value, Tolerance)) {
      detail::throw_real_violation(expected_value, value, Tolerance, site);
    }
  }

  constexpr double get_value() const noexcept { return value_; }

private:
  static constexpr double expected_value = denote(Expected);

  double value_;
};

}  // namespace metatest
