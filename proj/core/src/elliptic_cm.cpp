#include <algorithm>

#include "polarmm/endomorphism.hpp"
#include "polarmm/finite_reduction.hpp"

namespace polarmm {

EllipticCurve<NumberFieldElement> gaussian_cm_curve() {
  const auto& qi = gaussian_field();
  return EllipticCurve<NumberFieldElement>(nf_constant(qi, 1), nf_constant(qi, 0), nf_generator(qi));
}

namespace detail {

DivisorSumReport divisor_sum_by_reduction(const Endomorphism<NumberFieldElement>& f, std::uint64_t prime_bound) {
  const mpz_class d = f.degree();
  const std::uint64_t bound = std::min(prime_bound, kMaxReductionPrime);
  for (std::uint64_t p = 5; p <= bound; p += 4) {
    if (!is_prime(p) || d % static_cast<unsigned long>(p) == 0) continue;
    std::optional<ReducedCurve> reduced;
    try {
      reduced = reduce_curve(f.curve(), p);
    } catch (const std::domain_error&) {
      continue;
    }
    const Endomorphism<PrimeFieldElement> fp(reduced->curve, f.multiplier());
    std::vector<CurvePoint<PrimeFieldElement>> ker;
    for (const auto& pt : enumerate_points(reduced->curve)) {
      if (fp(pt).is_infinity()) ker.push_back(pt);
    }
    if (mpz_class(static_cast<unsigned long>(ker.size())) != d) continue;
    CurvePoint<PrimeFieldElement> sum = CurvePoint<PrimeFieldElement>::infinity();
    for (const auto& pt : ker) sum = reduced->curve.add(sum, pt);
    DivisorSumReport out;
    out.principal = sum.is_infinity();
    out.method = "reduction";
    out.prime = p;
    out.kernel_size = ker.size();
    out.sum = sum.to_string();
    return out;
  }
  throw std::domain_error("kernel points unavailable: no split prime below " + std::to_string(bound) +
                          " makes the kernel of " + f.multiplier().to_string() + " rational");
}

}  // namespace detail
}  // namespace polarmm
