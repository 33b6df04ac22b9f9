#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polarmm/elliptic_curve.hpp"
#include "polarmm/endomorphism.hpp"
#include "polarmm/gaussian_integer.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/prime_field.hpp"
#include "polarmm/rational_function.hpp"

namespace polarmm {

/// Largest prime accepted for reduction; point counting is naive.
inline constexpr std::uint64_t kMaxReductionPrime = 10000;

/// A curve over ℚ(i) reduced at a split prime, with the chosen image ι of i.
struct ReducedCurve {
  std::uint64_t p;
  PrimeFieldElement iota;
  EllipticCurve<PrimeFieldElement> curve;
};

/// The two square roots of −1 mod p, smaller residue first.
std::vector<PrimeFieldElement> square_roots_of_minus_one(std::uint64_t p);

/// Reduces a curve over ℚ(i) modulo the prime above p where i ↦ ι, with
/// ι = square_roots_of_minus_one(p)[iota_choice]. Refuses p = 2 (ramified),
/// inert primes p ≡ 3 mod 4, p > kMaxReductionPrime and bad reduction.
ReducedCurve reduce_curve(const EllipticCurve<NumberFieldElement>& curve, std::uint64_t p, unsigned iota_choice = 0);

struct FrobeniusData {
  ReducedCurve reduced;
  GaussianInteger alpha;       // N(alpha) = p
  std::uint64_t point_count;   // #E(𝔽_p) by enumeration
  std::int64_t trace;          // alpha + conj(alpha)
};

/// Finds the unique associate of a + bi (a² + b² = p) or of its conjugate
/// acting as (x, y) ↦ (x^p, y^p). Acting trivially on E(𝔽_p) leaves several
/// candidates, so points over 𝔽_{p²} are checked too.
FrobeniusData identify_frobenius(const ReducedCurve& reduced);

struct FrobeniusCheck {
  bool frobenius_action = false;  // alpha acts as (x^p, y^p) on E(𝔽_p) and sampled E(𝔽_{p²})
  bool composition_is_norm = false;  // F∘V = [p] on E(𝔽_p)
  bool hasse = false;                // |trace| <= 2√p
  bool point_count = false;          // #E(𝔽_p) = p + 1 − trace
  PolarizationCertificate frobenius_certificate;
  PolarizationCertificate verschiebung_certificate;

  bool passed() const;
};

FrobeniusCheck verify_frobenius_verschiebung(const FrobeniusData& data);

struct S3Report {
  bool member = false;  // alpha/conj(alpha) is not a root of unity
  std::optional<std::uint64_t> ratio_order;
};

/// Fⁿ ≠ Vⁿ for all n ≥ 1, decided through the ratio of multipliers.
S3Report s3_membership(const GaussianInteger& alpha);
inline S3Report s3_membership(const FrobeniusData& data) { return s3_membership(data.alpha); }

/// Applies i ↦ ι mod p to a rational function over ℚ(i) after scaling away
/// the content at the Gaussian prime (p, i − ι). Throws std::domain_error when
/// the denominator vanishes identically.
RationalFunction<PrimeFieldElement> reduce_map(const RationalFunction<NumberFieldElement>& map,
                                               const PrimeFieldElement& iota);

/// Points P of E(𝔽_p) with [n]P = O.
std::vector<CurvePoint<PrimeFieldElement>> rational_torsion(const EllipticCurve<PrimeFieldElement>& curve,
                                                            std::int64_t n);

}  // namespace polarmm
