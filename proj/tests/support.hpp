#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polarmm/elliptic_curve.hpp"
#include "polarmm/endomorphism.hpp"
#include "polarmm/gaussian_integer.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/prime_field.hpp"
#include "polarmm/sampling.hpp"

namespace testing {

using polarmm::CurvePoint;
using polarmm::EllipticCurve;
using polarmm::GaussianInteger;
using polarmm::NumberFieldElement;
using polarmm::PrimeFieldElement;
using polarmm::Rng;

/// a + bi with 1 <= a² + b² <= max_norm.
inline GaussianInteger random_gaussian(Rng& rng, long max_norm) {
  long bound = 0;
  while ((bound + 1) * (bound + 1) <= max_norm) ++bound;
  for (;;) {
    const long a = rng.between(-bound, bound);
    const long b = rng.between(-bound, bound);
    const long n = a * a + b * b;
    if (n >= 1 && n <= max_norm) return GaussianInteger(a, b);
  }
}

/// Every a + bi with 1 <= a² + b² <= max_norm.
inline std::vector<GaussianInteger> gaussians_up_to(long max_norm) {
  std::vector<GaussianInteger> out;
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      const long n = a * a + b * b;
      if (n >= 1 && n <= max_norm) out.emplace_back(a, b);
    }
  }
  return out;
}

/// Square-and-multiply mod p < 2³¹, kept apart from PrimeFieldElement.
inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1, base = b % p;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

/// #{(x, y) : y² = x³ + a x + b} + 1 via Euler's criterion.
inline std::uint64_t count_points_euler(std::int64_t a, std::int64_t b, std::uint64_t p) {
  const auto ap = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
  const auto bp = static_cast<std::uint64_t>(((b % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = (pow_mod(x, 3, p) + ap * x + bp) % p;
    if (rhs == 0) {
      count += 1;
    } else if (pow_mod(rhs, (p - 1) / 2, p) == 1) {
      count += 2;
    }
  }
  return count;
}

/// A random affine point of E(𝔽_p).
inline CurvePoint<PrimeFieldElement> random_point(const EllipticCurve<PrimeFieldElement>& curve, Rng& rng) {
  const std::uint64_t p = curve.a().modulus();
  for (;;) {
    const PrimeFieldElement x = polarmm::random_element(p, rng);
    const auto y = field_sqrt(curve.rhs(x));
    if (!y) continue;
    return CurvePoint<PrimeFieldElement>::affine(x, rng.below(2) ? *y : -*y);
  }
}

/// A nonsingular y² = x³ + a x + b over 𝔽_p without CM data.
inline EllipticCurve<PrimeFieldElement> random_curve(std::uint64_t p, Rng& rng) {
  for (;;) {
    const PrimeFieldElement a = polarmm::random_element(p, rng);
    const PrimeFieldElement b = polarmm::random_element(p, rng);
    const PrimeFieldElement disc = a * a * a * a.integer_like(4) + b * b * a.integer_like(27);
    if (!disc.is_zero()) return EllipticCurve<PrimeFieldElement>(a, b, std::nullopt);
  }
}

/// ℚ(i) coefficients as (re, im) pairs of exact rationals.
struct GaussRational {
  mpq_class re, im;
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

using GaussPoly = std::vector<GaussRational>;  // ascending

inline GaussPoly multiply(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out(a.size() + b.size() - 1, GaussRational{0, 0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

inline GaussRational as_gauss(const NumberFieldElement& e) {
  return {e.coeff(0).raw(), e.coefficients().size() > 1 ? e.coeff(1).raw() : mpq_class(0)};
}

}  // namespace testing
