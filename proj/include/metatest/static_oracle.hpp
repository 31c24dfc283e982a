#pragma once

// Static-phase building blocks: everything here is evaluated by the compiler
// and never calls into code under test.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace metatest {

/// Integer known in the static phase.
using static_int = std::int64_t;

/// Largest n for which n! fits in a 64-bit signed integer.
inline constexpr static_int max_factorial_input = 20;

// ---------------------------------------------------------------------------
// Factorial
// ---------------------------------------------------------------------------

/// Recursive factorial metafunction. Instantiation outside [0, 20] is
/// rejected by the constraint rather than wrapping around.
template <static_int N>
  requires(N >= 0 && N <= max_factorial_input)
struct factorial {
  static constexpr static_int value = N * factorial<N - 1>::value;
};

template <>
struct factorial<0> {
  static constexpr static_int value = 1;
};

template <static_int N>
inline constexpr static_int factorial_v = factorial<N>::value;

/// Iterative n!, usable only during constant evaluation. An out-of-range
/// argument makes the enclosing constant expression ill-formed.
consteval static_int static_factorial(static_int n) {
  if (n < 0 || n > max_factorial_input) {
    throw std::domain_error("static_factorial: argument outside [0, 20]");
  }
  static_int result = 1;
  for (static_int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Conditional selection
// ---------------------------------------------------------------------------

template <bool Cond, class Then, class Else>
struct select {
  using type = Then;
};

template <class Then, class Else>
struct select<false, Then, Else> {
  using type = Else;
};

template <bool Cond, class Then, class Else>
using select_t = typename select<Cond, Then, Else>::type;

/// Value-level counterpart of select.
template <class T>
consteval T static_select(bool cond, T then_value, T else_value) {
  return cond ? then_value : else_value;
}

// ---------------------------------------------------------------------------
// Width-driven return type
// ---------------------------------------------------------------------------

/// Byte width of a numeric kind.
template <class T>
  requires std::is_arithmetic_v<T>
inline constexpr std::size_t width_of = sizeof(T);

/// The wider of T and S; T wins ties.
template <class T, class S>
using wider_t = select_t<(sizeof(T) < sizeof(S)), S, T>;

/// Greater of x and y, returned in the wider of the two kinds.
template <class T, class S>
  requires std::is_arithmetic_v<T> && std::is_arithmetic_v<S>
constexpr wider_t<T, S> widened_max(T x, S y) {
  using result_type = wider_t<T, S>;
  bool x_greater = false;
  if constexpr (std::is_integral_v<T> && std::is_integral_v<S>) {
    x_greater = std::cmp_greater(x, y);
  } else {
    x_greater = x > y;
  }
  return x_greater ? static_cast<result_type>(x) : static_cast<result_type>(y);
}

// ---------------------------------------------------------------------------
// Type sequences
// ---------------------------------------------------------------------------

/// Terminator of every type sequence.
struct nil {};

template <class Head, class Tail>
struct cons;

namespace detail {

template <class S>
struct is_type_sequence : std::false_type {};

template <>
struct is_type_sequence<nil> : std::true_type {};

template <class Head, class Tail>
struct is_type_sequence<cons<Head, Tail>> : is_type_sequence<Tail> {};

}  // namespace detail

/// A cons chain that terminates in nil.
template <class S>
concept type_sequence = detail::is_type_sequence<S>::value;

template <class Head, class Tail>
struct cons {
  static_assert(type_sequence<Tail>, "cons tail must be a nil-terminated sequence");
  using head = Head;
  using tail = Tail;
};

template <class... Elements>
struct seq_build;

template <>
struct seq_build<> {
  using type = nil;
};

template <class Head, class... Rest>
struct seq_build<Head, Rest...> {
  using type = cons<Head, typename seq_build<Rest...>::type>;
};

template <class... Elements>
using seq_build_t = typename seq_build<Elements...>::type;

template <type_sequence S>
struct seq_length;

template <>
struct seq_length<nil> {
  static constexpr static_int value = 0;
};

template <class Head, class Tail>
struct seq_length<cons<Head, Tail>> {
  static constexpr static_int value = 1 + seq_length<Tail>::value;
};

template <type_sequence S>
inline constexpr static_int seq_length_v = seq_length<S>::value;

}  // namespace metatest
