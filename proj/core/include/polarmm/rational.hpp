#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polarmm {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long long n) : value_(static_cast<long>(n)) {}
  explicit Rational(const mpz_class& n) : value_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Accepts "7", "-3/4", "+12".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational integer_like(std::int64_t n) const { return Rational(static_cast<long long>(n)); }
  std::uint64_t characteristic() const { return 0; }

  Rational inverse() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

/// Exact square root, when the argument is the square of a rational.
std::optional<Rational> field_sqrt(const Rational& a);

inline std::optional<Rational> as_rational(const Rational& a) { return a; }

/// ln|n| for nonzero n, without overflow for huge n. Returns 0 for n = 0.
double log_abs(const mpz_class& n);

}  // namespace polarmm
