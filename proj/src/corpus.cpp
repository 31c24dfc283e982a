#include "metatest/corpus.hpp"

#include <stdexcept>
#include <utility>

// Builds of the regression fixture override this to seed a defect.
#ifndef METATEST_FACTORIAL_SEED
#define METATEST_FACTORIAL_SEED 1
#endif

namespace metatest::corpus {

namespace {

call_counters g_counters;

constexpr std::array<mutant_info, 3> g_mutants{{
    {"factorial-loop-bound", "factorial", "6", "mutant/factorial-loop-bound/6"},
    {"inc-decrement", "inc", "5", "mutant/inc-decrement/5"},
    {"scale10-times100", "scale10", "5e0", "mutant/scale10-times100/5e0"},
}};

template <std::size_t... I>
void register_factorial(registry& reg, std::index_sequence<I...>) {
  (reg.add(test_name("factorial", factorial_domain[I]),
           [] { check_return<factorial_domain[I], factorial_oracle>(factorial); },
           {"factorial", "return"}),
   ...);
}

template <std::size_t... I>
void register_inc(registry& reg, std::index_sequence<I...>) {
  (reg.add(test_name("inc", inc_domain[I]),
           [] { check_out_param<inc_domain[I], inc_oracle>(inc); }, {"inc", "out-param"}),
   ...);
}

template <std::size_t... I>
void register_scale10(registry& reg, std::index_sequence<I...>) {
  (reg.add(test_name("scale10", scale10_domain[I]),
           [] {
             check_real_return<scale10_domain[I], scale10_oracle, scale10_tolerance>(scale10);
           },
           {"scale10", "real"}),
   ...);
}

}  // namespace

std::int64_t factorial(std::int64_t n) {
  ++g_counters.factorial;
  if (n < 0 || n > max_factorial_input) {
    throw std::domain_error("factorial: argument " + std::to_string(n) + " outside [0, 20]");
  }
  std::int64_t f = METATEST_FACTORIAL_SEED;
  for (std::int64_t i = 1; i <= n; ++i) {
    f *= i;
  }
  return f;
}

void inc(std::int64_t& i) {
  ++g_counters.inc;
  ++i;
}

double scale10(double d) {
  ++g_counters.scale10;
  return d * 10;
}

std::int64_t factorial_loop_bound(std::int64_t n) {
  ++g_counters.factorial_loop_bound;
  std::int64_t f = 1;
  for (std::int64_t i = 1; i < n; ++i) {
    f *= i;
  }
  return f;
}

void inc_decrement(std::int64_t& i) {
  ++g_counters.inc_decrement;
  --i;
}

double scale10_times100(double d) {
  ++g_counters.scale10_times100;
  return d * 100;
}

call_counters& counters() noexcept { return g_counters; }

void reset_counters() noexcept { g_counters = {}; }

std::span<const mutant_info> mutants() noexcept { return g_mutants; }

std::string test_name(std::string_view entry, static_int input) {
  return std::string(entry) + "/" + std::to_string(input);
}

std::string test_name(std::string_view entry, static_real input) {
  return std::string(entry) + "/" + std::to_string(input.significand) + "e" +
         std::to_string(input.exponent);
}

void register_suite(registry& reg, suite_options options) {
  register_factorial(reg, std::make_index_sequence<factorial_domain.size()>{});
  register_inc(reg, std::make_index_sequence<inc_domain.size()>{});
  register_scale10(reg, std::make_index_sequence<scale10_domain.size()>{});

  if (!options.include_mutants) {
    return;
  }
  reg.add(std::string(g_mutants[0].test_name),
          [] { check_return<6, factorial_oracle>(factorial_loop_bound); },
          {"mutant", "factorial"}, expectation::violation);
  reg.add(std::string(g_mutants[1].test_name),
          [] { check_out_param<5, inc_oracle>(inc_decrement); }, {"mutant", "inc"},
          expectation::violation);
  reg.add(std::string(g_mutants[2].test_name),
          [] {
            check_real_return<static_real{5, 0}, scale10_oracle, scale10_tolerance>(
                scale10_times100);
          },
          {"mutant", "scale10"}, expectation::violation);
}

}  // namespace metatest::corpus
