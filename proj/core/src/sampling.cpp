#include "polarmm/sampling.hpp"

namespace polarmm {

NumberFieldElement random_element(const NumberFieldPtr& field, Rng& rng, std::int64_t num_bound, std::int64_t den_bound) {
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < field->degree(); ++k) {
    const auto n = rng.between(-num_bound, num_bound);
    const auto d = rng.between(1, den_bound);
    coeffs.emplace_back(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  }
  return NumberFieldElement(field, coeffs);
}

}  // namespace polarmm
