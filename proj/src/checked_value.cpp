#include "metatest/checked_value.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace metatest {

oracle_violation::oracle_violation(std::string expected, std::string actual,
                                   std::string relation, std::string site)
    : expected_(std::move(expected)),
      actual_(std::move(actual)),
      relation_(std::move(relation)),
      site_(std::move(site)) {
  rendered_ = "expected " + expected_ + " " + relation_ + " actual " + actual_ + " at " + site_;
}

std::string render_value(std::int64_t value) { return std::to_string(value); }

std::string render_value(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    return "?";
  }
  return {buf.data(), end};
}

std::string tolerance_relation_name(double tolerance) {
  if (tolerance == 0.0) {
    return "==";
  }
  return "~=(rel " + render_value(tolerance) + ")";
}

namespace detail {

void throw_int_violation(std::int64_t expected, std::int64_t actual, std::string_view relation,
                         std::string_view site) {
  throw oracle_violation(render_value(expected), render_value(actual), std::string(relation),
                         std::string(site));
}

void throw_real_violation(double expected, double actual, double tolerance,
                          std::string_view site) {
  throw oracle_violation(render_value(expected), render_value(actual),
                         tolerance_relation_name(tolerance), std::string(site));
}

}  // namespace detail

}  // namespace metatest
