#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarmm/extension_field.hpp"
#include "polarmm/gaussian_integer.hpp"
#include "polarmm/prime_field.hpp"
#include "polarmm/rational.hpp"

namespace polarmm {

/// ℚ[x]/(f) with a designated involution; houses ℚ(i) and ℚ(ζ₅).
using NumberField = ExtensionField<Rational>;
using NumberFieldPtr = ExtensionFieldPtr<Rational>;
using NumberFieldElement = ExtElement<Rational>;

/// Builds ℚ[x]/(modulus) from ascending rational coefficients. Checks that the
/// modulus is monic without rational roots (degree <= 4) and, when a
/// conjugation image is given, that it is an involutive ring endomorphism.
NumberFieldPtr make_number_field(const std::vector<Rational>& modulus, std::optional<std::vector<Rational>> conjugation,
                                 std::string name);

/// ℚ(i): modulus x² + 1, conjugation x ↦ −x.
const NumberFieldPtr& gaussian_field();
/// ℚ(ζ₅): modulus x⁴ + x³ + x² + x + 1, conjugation x ↦ x⁴.
const NumberFieldPtr& cyclotomic5_field();

/// "Qi", "Qzeta5", or a JSON object {"modulus":[...], "conjugation":[...]}.
NumberFieldPtr parse_field(std::string_view spec);

/// Polynomial-in-generator literal such as "4+3*w+12*w^2", "-w", "1/2*w^3".
NumberFieldElement parse_element(const NumberFieldPtr& field, std::string_view literal);

NumberFieldElement nf_constant(const NumberFieldPtr& field, const Rational& c);
NumberFieldElement nf_generator(const NumberFieldPtr& field);
inline NumberFieldElement conjugate(const NumberFieldElement& a) { return a.conjugate(); }

/// The integer value when the element is a rational integer.
std::optional<mpz_class> is_rational_integer(const NumberFieldElement& a);

/// Least n >= 1 with uⁿ = 1, searching every n with φ(n) <= [K:ℚ].
std::optional<std::uint64_t> is_root_of_unity(const NumberFieldElement& u);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

/// a + b·i as an element of ℚ(i).
NumberFieldElement to_gaussian_element(const GaussianInteger& g);
/// Inverse of `to_gaussian_element`; throws unless the element lies in ℤ[i].
GaussianInteger to_gaussian_integer(const NumberFieldElement& a);

/// r mod p; empty when p divides the denominator.
std::optional<PrimeFieldElement> reduce_rational(const Rational& r, std::uint64_t p);

/// Ring map ℚ[w]/(f) → 𝔽_p sending w to `generator_image`, which must be a
/// root of f mod p. Throws std::domain_error when a coefficient has a
/// denominator divisible by p.
PrimeFieldElement reduce_element(const NumberFieldElement& a, const PrimeFieldElement& generator_image);

}  // namespace polarmm
