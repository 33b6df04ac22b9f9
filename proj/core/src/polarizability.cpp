#include "polarmm/polarizability.hpp"

#include <stdexcept>

namespace polarmm {

std::string to_string(PolarizationReason reason) {
  switch (reason) {
    case PolarizationReason::NormIsInteger: return "norm-is-integer";
    case PolarizationReason::NormNotInteger: return "norm-not-integer";
    case PolarizationReason::MatrixGramDiagonal: return "matrix-gram-diagonal";
    case PolarizationReason::MatrixGramNotDiagonal: return "matrix-gram-not-diagonal";
    case PolarizationReason::KernelTwoTorsion: return "kernel-two-torsion";
    case PolarizationReason::PullbackDegree: return "pullback-degree";
  }
  return "unknown";
}

PolarizationCertificate cm_polarization_check(const NumberFieldElement& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("cm_polarization_check: alpha must be nonzero");
  const NumberFieldElement norm = alpha * alpha.conjugate();
  PolarizationCertificate cert;
  const auto d = is_rational_integer(norm);
  if (d && *d >= 1) {
    cert.polarized = true;
    cert.weight = *d;
    cert.reason = PolarizationReason::NormIsInteger;
    cert.diagnostics = "alpha*conj(alpha) = " + d->get_str();
  } else {
    cert.reason = PolarizationReason::NormNotInteger;
    cert.diagnostics = "alpha*conj(alpha) = " + norm.to_string() + " is not a rational integer";
  }
  return cert;
}

CounterexamplePairReport counterexample_pair_check(const NumberFieldElement& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("counterexample_pair_check: alpha must be nonzero");
  CounterexamplePairReport report;
  const NumberFieldElement conj = alpha.conjugate();
  report.norm = is_rational_integer(alpha * conj);
  report.alpha_is_integer = is_rational_integer(alpha).has_value();
  report.ratio_unity_order = is_root_of_unity(alpha / conj);
  std::vector<std::string> failures;
  if (!report.norm) failures.push_back("alpha*conj(alpha) is not a rational integer");
  if (report.alpha_is_integer) failures.push_back("alpha is a rational integer");
  if (report.ratio_unity_order) {
    failures.push_back("ratio is a root of unity, order " + std::to_string(*report.ratio_unity_order));
  }
  report.valid = failures.empty();
  if (report.valid) {
    report.diagnostics = "norm " + report.norm->get_str() + ", alpha not in Z, alpha/conj(alpha) not a root of unity";
  } else {
    for (std::size_t k = 0; k < failures.size(); ++k) report.diagnostics += (k ? "; " : "") + failures[k];
  }
  return report;
}

IntegerMatrix::IntegerMatrix(std::vector<std::vector<GaussianInteger>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("matrix must have dimension >= 1");
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw std::invalid_argument("matrix must be square");
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  std::vector<std::vector<GaussianInteger>> rows(n, std::vector<GaussianInteger>(n));
  for (std::size_t k = 0; k < n; ++k) rows[k][k] = GaussianInteger(1);
  return IntegerMatrix(std::move(rows));
}

IntegerMatrix IntegerMatrix::conjugate_transpose() const {
  const std::size_t n = dimension();
  std::vector<std::vector<GaussianInteger>> out(n, std::vector<GaussianInteger>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[c][r] = rows_[r][c].conjugate();
  }
  return IntegerMatrix(std::move(out));
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t n = a.dimension();
  if (b.dimension() != n) throw std::invalid_argument("matrix dimensions differ");
  std::vector<std::vector<GaussianInteger>> out(n, std::vector<GaussianInteger>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.rows_[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) out[r][c] = out[r][c] + a.rows_[r][k] * b.rows_[k][c];
    }
  }
  return IntegerMatrix(std::move(out));
}

IntegerMatrix IntegerMatrix::power(unsigned n) const {
  IntegerMatrix acc = identity(dimension());
  IntegerMatrix base = *this;
  while (n > 0) {
    if (n & 1U) acc = acc * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return acc;
}

std::string IntegerMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < rows_.size(); ++c) out += (c ? ", " : "") + rows_[r][c].to_string();
    out += "]";
  }
  return out + "]";
}

PolarizationCertificate matrix_polarization_check(const IntegerMatrix& m) {
  const IntegerMatrix gram = m.conjugate_transpose() * m;
  const std::size_t n = m.dimension();
  const GaussianInteger& d = gram.at(0, 0);
  PolarizationCertificate cert;
  cert.reason = PolarizationReason::MatrixGramNotDiagonal;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const GaussianInteger expected = r == c ? d : GaussianInteger(0);
      if (!(gram.at(r, c) == expected)) {
        cert.diagnostics = "M^dagger M = " + gram.to_string() + " is not a multiple of the identity";
        return cert;
      }
    }
  }
  if (d.im() != 0 || d.re() < 1) {
    cert.diagnostics = "M^dagger M = " + gram.to_string() + " is not a positive multiple of the identity";
    return cert;
  }
  cert.polarized = true;
  cert.weight = d.re();
  cert.reason = PolarizationReason::MatrixGramDiagonal;
  cert.diagnostics = "M^dagger M = " + d.re().get_str() + " * I";
  return cert;
}

std::optional<unsigned> matrix_power_coincidence(const IntegerMatrix& a, const IntegerMatrix& b, unsigned bound) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("matrix_power_coincidence: dimensions differ");
  if (bound < 1) throw std::invalid_argument("matrix_power_coincidence: bound must be >= 1");
  IntegerMatrix pa = a, pb = b;
  for (unsigned n = 1; n <= bound; ++n) {
    if (pa == pb) return n;
    pa = pa * a;
    pb = pb * b;
  }
  return std::nullopt;
}

WeightDivision weight_division(const mpz_class& d, const mpz_class& n, unsigned g) {
  if (d < 1 || n < 1 || g < 1) throw std::invalid_argument("weight_division needs d, n, g >= 1");
  if (n % d != 0) {
    throw std::domain_error("weight " + d.get_str() + " does not divide " + n.get_str() +
                            ": no polarized j with f o j = h exists");
  }
  WeightDivision out;
  out.weight = n / d;
  mpz_pow_ui(out.degree.get_mpz_t(), out.weight.get_mpz_t(), g);
  return out;
}

}  // namespace polarmm
