#include "polarmm/prime_field.hpp"

#include <stdexcept>

namespace polarmm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not a supported prime");
  }
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  value_ = static_cast<std::uint64_t>(r);
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
  if (o.p_ != p_) {
    throw std::invalid_argument("mixed prime fields: " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
  check_same(o);
  value_ = (value_ + o.value_) % p_;
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
  check_same(o);
  value_ = (value_ + p_ - o.value_) % p_;
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
  check_same(o);
  value_ = (value_ * o.value_) % p_;
  return *this;
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  std::uint64_t base = value_;
  std::uint64_t acc = 1 % p_;
  while (e > 0) {
    if (e & 1U) acc = (acc * base) % p_;
    base = (base * base) % p_;
    e >>= 1U;
  }
  return {acc, p_, Raw{}};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

int PrimeFieldElement::legendre() const {
  if (value_ == 0) return 0;
  if (p_ == 2) return 1;
  return pow((p_ - 1) / 2).value_ == 1 ? 1 : -1;
}

std::optional<PrimeFieldElement> field_sqrt(const PrimeFieldElement& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero() || p == 2) return a;
  if (a.legendre() != 1) return std::nullopt;
  if (p % 4 == 3) return a.pow((p + 1) / 4);
  // Tonelli-Shanks: p - 1 = q·2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  PrimeFieldElement z(2, p);
  while (z.legendre() != -1) z += z.one_like();
  PrimeFieldElement c = z.pow(q);
  PrimeFieldElement x = a.pow((q + 1) / 2);
  PrimeFieldElement t = a.pow(q);
  unsigned m = s;
  while (!(t == t.one_like())) {
    unsigned i = 0;
    PrimeFieldElement t2 = t;
    while (!(t2 == t2.one_like())) {
      t2 *= t2;
      ++i;
    }
    PrimeFieldElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

}  // namespace polarmm
