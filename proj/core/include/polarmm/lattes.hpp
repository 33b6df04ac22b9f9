#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarmm/endomorphism.hpp"
#include "polarmm/extension_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/rational_function.hpp"
#include "polarmm/roots.hpp"
#include "polarmm/sampling.hpp"

namespace polarmm {

/// x(f(P)) as a map on ℙ¹, with ∞ ↦ ∞.
template <FieldElement K>
struct LattesMap {
  Endomorphism<K> source;
  RationalFunction<K> map;

  unsigned degree() const { return static_cast<unsigned>(map.degree()); }
};

template <FieldElement K>
LattesMap<K> build_lattes(const Endomorphism<K>& f) {
  SymbolicImage<K> image = symbolic_image(f);
  if (mpz_class(image.x_map.degree()) != f.degree()) {
    throw std::logic_error("Lattès map of " + f.to_string() + " has degree " + std::to_string(image.x_map.degree()));
  }
  return {f, std::move(image.x_map)};
}

struct SemiconjugacyReport {
  unsigned checked = 0;
  unsigned failures = 0;
  unsigned quadratic_points = 0;  // samples whose y needed a quadratic extension
  unsigned kernel_points = 0;     // samples sent to ∞
  std::string first_failure;

  bool passed() const { return checked > 0 && failures == 0; }
};

/// Checks map(x(P)) = x(f(P)) at `samples` points P = (x, y), x drawn by
/// `sample_x` and y taken in K(√(x³ + a x + b)).
template <FieldElement K, class Sampler>
SemiconjugacyReport verify_semiconjugacy(const LattesMap<K>& lattes, unsigned samples, Sampler&& sample_x) {
  using L = ExtElement<K>;
  SemiconjugacyReport report;
  const EllipticCurve<K>& curve = lattes.source.curve();
  for (unsigned k = 0; k < samples; ++k) {
    const K x = sample_x();
    const K c = curve.rhs(x);
    const auto root = field_sqrt(c);
    const AdjoinedRoot<K> ext =
        root ? adjoin_root(Polynomial<K>(std::vector<K>{-*root, x.one_like()}, x), "Ly")
             : adjoin_root(Polynomial<K>(std::vector<K>{-c, x.zero_like(), x.one_like()}, x), "Ly");
    if (!root) ++report.quadratic_points;
    const L like = L::constant(ext.field, x.zero_like());
    auto embed = [&](const K& v) { return lift(v, like); };
    const Endomorphism<L> f = lattes.source.template base_change<L>(embed);
    const CurvePoint<L> image = f(CurvePoint<L>::affine(embed(x), ext.root));
    const ProjectivePoint<L> expected =
        image.is_infinity() ? ProjectivePoint<L>::infinity() : ProjectivePoint<L>::affine(image.x());
    if (image.is_infinity()) ++report.kernel_points;
    const ProjectivePoint<L> got = lattes.map.evaluate_mapped(ProjectivePoint<L>::affine(embed(x)), embed);
    ++report.checked;
    if (!(got == expected)) {
      if (report.failures == 0) {
        report.first_failure = "x = " + x.to_string() + ": map gives " + got.to_string() + ", x(f(P)) = " + expected.to_string();
      }
      ++report.failures;
    }
  }
  return report;
}

/// Samples x ∈ ℚ(w) with small rational coefficients.
SemiconjugacyReport verify_semiconjugacy(const LattesMap<NumberFieldElement>& lattes, unsigned samples,
                                         std::uint64_t seed = kDefaultSeed);
/// Samples x ∈ 𝔽_p uniformly.
SemiconjugacyReport verify_semiconjugacy(const LattesMap<PrimeFieldElement>& lattes, unsigned samples,
                                         std::uint64_t seed = kDefaultSeed);

/// Multiplicity in φ*(∞) ∼ deg(φ)·(∞) on ℙ¹.
template <FieldElement K>
unsigned pullback_degree(const RationalFunction<K>& map) {
  return static_cast<unsigned>(map.degree());
}

/// δ = (φ₁, φ₂) on ℙ¹×ℙ¹ with D = {∞}×ℙ¹ + ℙ¹×{∞}: δ*D ∼ d·D iff both
/// factors have degree d.
template <FieldElement K>
PolarizationCertificate product_pullback_check(const RationalFunction<K>& first, const RationalFunction<K>& second) {
  const unsigned d1 = pullback_degree(first), d2 = pullback_degree(second);
  PolarizationCertificate cert;
  cert.reason = PolarizationReason::PullbackDegree;
  if (d1 != d2) {
    cert.diagnostics = "unequal degrees " + std::to_string(d1) + " and " + std::to_string(d2) +
                       ": no single weight for D";
    return cert;
  }
  cert.polarized = true;
  cert.weight = mpz_class(static_cast<unsigned long>(d1));
  cert.diagnostics = "delta*D ~ " + std::to_string(d1) + "D";
  if (d1 == 1) cert.diagnostics += " (weight 1: not a polarization)";
  return cert;
}

/// Roots of the map's denominator, in K or in K(√disc) when one quadratic
/// factor remains.
template <FieldElement K>
std::vector<ExtElement<K>> kernel_x_coordinates(const RationalFunction<K>& map) {
  const Polynomial<K> h = squarefree_part(map.denominator());
  const K zero = h.zero_element();
  const RootSplit<K> split = find_roots(h);
  if (split.residual.degree() > 2) {
    throw std::domain_error("denominator keeps an irreducible factor of degree " +
                            std::to_string(split.residual.degree()));
  }
  const AdjoinedRoot<K> ext =
      adjoin_root(split.residual.degree() == 2 ? split.residual : Polynomial<K>::variable(zero), "Kx");
  const ExtElement<K> like = ExtElement<K>::constant(ext.field, zero);
  std::vector<ExtElement<K>> out;
  for (const K& r : split.roots) out.push_back(lift(r, like));
  if (split.residual.degree() == 2) {
    out.push_back(ext.root);
    out.push_back(ExtElement<K>::constant(ext.field, -split.residual.coeff(1)) - ext.root);
  }
  return out;
}

/// Reference Lattès maps of [2+i] and [2−i] on y² = x³ + x over ℚ(i):
/// (3−4i)x(x²+1−2i)²/(5x²+1+2i)² and its conjugate.
RationalFunction<NumberFieldElement> reference_phi();
RationalFunction<NumberFieldElement> reference_psi();

/// Numerator and denominator of the canonical form scaled by the least
/// common denominator of their rational coefficients, e.g. the expanded
/// (5x² + 1 + 2i)² with leading coefficient 25.
std::pair<Polynomial<NumberFieldElement>, Polynomial<NumberFieldElement>> integral_presentation(
    const RationalFunction<NumberFieldElement>& map);

/// Coefficient lists (ascending, element literals) for golden comparisons.
std::vector<std::string> coefficient_literals(const Polynomial<NumberFieldElement>& p);

}  // namespace polarmm
