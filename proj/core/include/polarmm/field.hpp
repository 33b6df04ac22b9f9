#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace polarmm {

/// Value type with exact field arithmetic. Constants are produced from an
/// existing element (`zero_like`, `integer_like`) because the field itself is
/// runtime data: a prime, a modulus polynomial, a curve equation.
template <class K>
concept FieldElement = std::copy_constructible<K> && requires(const K a, const K b, std::int64_t n) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<K>;
  { a.one_like() } -> std::convertible_to<K>;
  { a.integer_like(n) } -> std::convertible_to<K>;
  { a.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <FieldElement K>
K power(K base, std::uint64_t e) {
  K acc = base.one_like();
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

template <FieldElement K>
bool is_one(const K& a) {
  return a == a.one_like();
}

}  // namespace polarmm
