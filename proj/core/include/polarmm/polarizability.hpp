#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarmm/gaussian_integer.hpp"
#include "polarmm/number_field.hpp"

namespace polarmm {

enum class PolarizationReason {
  NormIsInteger,
  NormNotInteger,
  MatrixGramDiagonal,
  MatrixGramNotDiagonal,
  KernelTwoTorsion,
  PullbackDegree,
};

/// Stable tag, e.g. "norm-is-integer".
std::string to_string(PolarizationReason reason);

/// Numeric stand-in for ψ*L ≅ L^⊗d: the verdict, the weight d and the
/// criterion that produced them.
struct PolarizationCertificate {
  bool polarized = false;
  std::optional<mpz_class> weight;  // present iff polarized
  PolarizationReason reason = PolarizationReason::NormNotInteger;
  std::string diagnostics;
  /// Card(E[2] ∩ Ker f) for the two-torsion criterion.
  std::optional<unsigned> kernel_two_torsion;

  /// Weight 1 passes the algebraic test but is not a polarization (which needs d > 1).
  bool is_polarization() const { return polarized && weight && *weight > 1; }
};

/// Rosati criterion in the CM case: α is polarized with weight d iff
/// α·ᾱ = d is a rational integer.
PolarizationCertificate cm_polarization_check(const NumberFieldElement& alpha);

struct CounterexamplePairReport {
  bool valid = false;
  std::optional<mpz_class> norm;                 // α·ᾱ when it is an integer
  bool alpha_is_integer = false;
  std::optional<std::uint64_t> ratio_unity_order;  // order of α/ᾱ when a root of unity
  std::string diagnostics;
};

/// α·ᾱ ∈ ℤ, α ∉ ℤ and α/ᾱ not a root of unity: then the diagonal of A×A
/// is not preperiodic under (α, ᾱ) although both factors are polarized.
CounterexamplePairReport counterexample_pair_check(const NumberFieldElement& alpha);

/// Square matrix over ℤ[i] acting on Aᵏ coordinate-wise.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::vector<std::vector<GaussianInteger>> rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t dimension() const { return rows_.size(); }
  const GaussianInteger& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  const std::vector<std::vector<GaussianInteger>>& rows() const { return rows_; }

  IntegerMatrix conjugate_transpose() const;
  IntegerMatrix power(unsigned n) const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) { return a.rows_ == b.rows_; }

  std::string to_string() const;

 private:
  std::vector<std::vector<GaussianInteger>> rows_;
};

/// Product polarization: M is polarized with weight d iff M†M = d·I.
PolarizationCertificate matrix_polarization_check(const IntegerMatrix& m);

/// Least n <= bound with Aⁿ = Bⁿ.
std::optional<unsigned> matrix_power_coincidence(const IntegerMatrix& a, const IntegerMatrix& b, unsigned bound);

struct WeightDivision {
  mpz_class weight;  // m = n / d
  mpz_class degree;  // deg j = m^g
};

/// f∘j = h with f of weight d and h of weight n on a g-dimensional variety:
/// j has weight n/d for L^⊗d and degree (n/d)^g. Throws std::domain_error
/// when d does not divide n.
WeightDivision weight_division(const mpz_class& d, const mpz_class& n, unsigned g);

}  // namespace polarmm
