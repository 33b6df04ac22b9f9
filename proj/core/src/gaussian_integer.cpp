#include "polarmm/gaussian_integer.hpp"

#include <stdexcept>

namespace polarmm {

namespace {

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("Gaussian integer component exceeds 64 bits");
  return v.get_si();
}

// Nearest integer to n/d for d > 0, ties rounded up.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class twice = 2 * n + d;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
  return q;
}

}  // namespace

std::int64_t GaussianInteger::re64() const { return to_int64(re_); }
std::int64_t GaussianInteger::im64() const { return to_int64(im_); }

bool GaussianInteger::divides(const GaussianInteger& b, const GaussianInteger& a) {
  if (b.is_zero()) return a.is_zero();
  const GaussianInteger num = a * b.conjugate();
  const mpz_class n = b.norm();
  return mpz_divisible_p(num.re_.get_mpz_t(), n.get_mpz_t()) != 0 &&
         mpz_divisible_p(num.im_.get_mpz_t(), n.get_mpz_t()) != 0;
}

GaussianInteger GaussianInteger::exact_quotient(const GaussianInteger& a, const GaussianInteger& b) {
  if (!divides(b, a)) throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
  if (b.is_zero()) return {};
  const GaussianInteger num = a * b.conjugate();
  const mpz_class n = b.norm();
  return {mpz_class(num.re_ / n), mpz_class(num.im_ / n)};
}

GaussianInteger GaussianInteger::rounded_quotient(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
  const GaussianInteger num = a * b.conjugate();
  const mpz_class n = b.norm();
  return {round_div(num.re_, n), round_div(num.im_, n)};
}

GaussianInteger GaussianInteger::gcd(GaussianInteger a, GaussianInteger b) {
  while (!b.is_zero()) {
    GaussianInteger r = a - rounded_quotient(a, b) * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string GaussianInteger::to_string() const {
  if (im_ == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (re_ == 0) return imag;
  if (im_ > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

}  // namespace polarmm
