#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polarmm {

/// Element a + b·i of ℤ[i]. Used for CM multipliers, matrix entries and
/// lowest-terms height computations.
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(long re, long im = 0) : re_(re), im_(im) {}
  GaussianInteger(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }

  /// Components as machine integers; throws std::overflow_error if they do not fit.
  std::int64_t re64() const;
  std::int64_t im64() const;

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_unit() const { return norm() == 1; }
  mpz_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianInteger conjugate() const { return {re_, -im_}; }

  GaussianInteger operator-() const { return {-re_, -im_}; }
  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// True when b divides a in ℤ[i].
  static bool divides(const GaussianInteger& b, const GaussianInteger& a);
  /// Exact quotient a / b; throws std::domain_error unless b | a.
  static GaussianInteger exact_quotient(const GaussianInteger& a, const GaussianInteger& b);
  /// Rounded Euclidean division: a = q·b + r with N(r) <= N(b)/2.
  static GaussianInteger rounded_quotient(const GaussianInteger& a, const GaussianInteger& b);
  static GaussianInteger gcd(GaussianInteger a, GaussianInteger b);

  std::string to_string() const;

 private:
  mpz_class re_;
  mpz_class im_;
};

}  // namespace polarmm
