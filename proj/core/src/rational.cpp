#include "polarmm/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polarmm {

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
      q = mpq_class(mpz_class(s.substr(0, slash), 10), den);
    }
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("zero denominator", 0) == 0) throw;
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> field_sqrt(const Rational& a) {
  if (a.sign() < 0) return std::nullopt;
  const mpz_class n = a.numerator();
  const mpz_class d = a.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

double log_abs(const mpz_class& n) {
  if (n == 0) return 0.0;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace polarmm
