#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace polarmm {

bool is_prime(std::uint64_t n);

/// Residue class modulo a prime p. The modulus travels with the value; mixing
/// residues of different primes throws std::invalid_argument.
class PrimeFieldElement {
 public:
  /// Largest supported characteristic; keeps products inside 64 bits.
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;

  PrimeFieldElement(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return value_ == 0; }
  PrimeFieldElement zero_like() const { return {0, p_, Raw{}}; }
  PrimeFieldElement one_like() const { return {1, p_, Raw{}}; }
  PrimeFieldElement integer_like(std::int64_t n) const { return {n, p_}; }
  std::uint64_t characteristic() const { return p_; }

  PrimeFieldElement pow(std::uint64_t e) const;
  PrimeFieldElement inverse() const;
  /// Legendre symbol as 1, -1 or 0.
  int legendre() const;

  PrimeFieldElement operator-() const { return {value_ == 0 ? 0 : p_ - value_, p_, Raw{}}; }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o);
  PrimeFieldElement& operator-=(const PrimeFieldElement& o);
  PrimeFieldElement& operator*=(const PrimeFieldElement& o);
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this *= o.inverse(); }

  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }
  friend bool operator<(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a.value_ < b.value_; }

  std::string to_string() const { return std::to_string(value_); }

 private:
  struct Raw {};
  PrimeFieldElement(std::uint64_t value, std::uint64_t p, Raw) : value_(value), p_(p) {}
  void check_same(const PrimeFieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

/// Tonelli-Shanks square root.
std::optional<PrimeFieldElement> field_sqrt(const PrimeFieldElement& a);


}  // namespace polarmm
