#include "polarmm/roots.hpp"

namespace polarmm::detail {

namespace {

constexpr unsigned long kMaxTrialDivisor = 100000000UL;

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_root_candidates(const Polynomial<Rational>& f) {
  if (f.degree() < 1) return {};
  if (f.coeff(0).is_zero()) return {Rational()};
  mpz_class lcm = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class a0 = (f.coeff(0) * Rational(lcm)).numerator();
  mpz_class an = (f.leading() * Rational(lcm)).numerator();
  if (abs(a0) > kMaxTrialDivisor || abs(an) > kMaxTrialDivisor) return {};
  std::vector<Rational> out;
  for (const auto& p : divisors(a0)) {
    for (const auto& q : divisors(an)) {
      out.emplace_back(p, q);
      out.emplace_back(mpz_class(-p), q);
    }
  }
  return out;
}

}  // namespace polarmm::detail
