#include "polarmm/lattes.hpp"

namespace polarmm {

namespace {

using NFE = NumberFieldElement;

Polynomial<NFE> gaussian_poly(std::initializer_list<GaussianInteger> ascending) {
  std::vector<NFE> coeffs;
  for (const auto& g : ascending) coeffs.push_back(to_gaussian_element(g));
  return Polynomial<NFE>(std::move(coeffs), nf_constant(gaussian_field(), 0));
}

// u·x·(x² + c)² / (5x² + e)².
RationalFunction<NFE> factored_form(const GaussianInteger& u, const GaussianInteger& c, const GaussianInteger& e) {
  const Polynomial<NFE> num = gaussian_poly({0, u}) * power(gaussian_poly({c, 0, 1}), 2);
  const Polynomial<NFE> den = power(gaussian_poly({e, 0, 5}), 2);
  return RationalFunction<NFE>(num, den);
}

}  // namespace

SemiconjugacyReport verify_semiconjugacy(const LattesMap<NumberFieldElement>& lattes, unsigned samples, std::uint64_t seed) {
  Rng rng(seed);
  const NumberFieldPtr field = lattes.source.curve().a().field();
  return verify_semiconjugacy(lattes, samples, [&] { return random_element(field, rng); });
}

SemiconjugacyReport verify_semiconjugacy(const LattesMap<PrimeFieldElement>& lattes, unsigned samples, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t p = lattes.source.curve().a().modulus();
  return verify_semiconjugacy(lattes, samples, [&] { return random_element(p, rng); });
}

RationalFunction<NumberFieldElement> reference_phi() {
  return factored_form(GaussianInteger(3, -4), GaussianInteger(1, -2), GaussianInteger(1, 2));
}

RationalFunction<NumberFieldElement> reference_psi() {
  return factored_form(GaussianInteger(3, 4), GaussianInteger(1, 2), GaussianInteger(1, -2));
}

std::pair<Polynomial<NumberFieldElement>, Polynomial<NumberFieldElement>> integral_presentation(
    const RationalFunction<NumberFieldElement>& map) {
  mpz_class lcm = 1;
  for (const auto* p : {&map.numerator(), &map.denominator()}) {
    for (const auto& c : p->coefficients()) {
      for (const auto& q : c.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
    }
  }
  const NFE scale = nf_constant(map.zero_element().field(), Rational(lcm));
  return {map.numerator() * scale, map.denominator() * scale};
}

std::vector<std::string> coefficient_literals(const Polynomial<NumberFieldElement>& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

}  // namespace polarmm
