#pragma once

#include <optional>
#include <vector>

#include "polarmm/extension_field.hpp"
#include "polarmm/polynomial.hpp"
#include "polarmm/prime_field.hpp"
#include "polarmm/rational.hpp"

namespace polarmm {

namespace detail {

std::vector<Rational> rational_root_candidates(const Polynomial<Rational>& f);

// Candidate roots for degree >= 3 factors that lack a closed form.
inline std::vector<PrimeFieldElement> root_candidates(const Polynomial<PrimeFieldElement>& f) {
  std::vector<PrimeFieldElement> out;
  const std::uint64_t p = f.zero_element().modulus();
  out.reserve(p);
  for (std::uint64_t v = 0; v < p; ++v) out.emplace_back(static_cast<std::int64_t>(v), p);
  return out;
}

inline std::vector<Rational> root_candidates(const Polynomial<Rational>& f) { return rational_root_candidates(f); }

template <FieldElement B>
std::vector<ExtElement<B>> root_candidates(const Polynomial<ExtElement<B>>& f) {
  // Only polynomials with coefficients in the base field are searched, via
  // the base field's own candidates.
  const ExtElement<B> like = f.zero_element();
  std::vector<B> base_coeffs;
  for (const auto& c : f.coefficients()) {
    if (!c.is_base()) return {};
    base_coeffs.push_back(c.coeff(0));
  }
  const Polynomial<B> base(base_coeffs, like.field()->base_zero());
  std::vector<ExtElement<B>> out;
  for (const auto& r : root_candidates(base)) out.push_back(ExtElement<B>::constant(like.field(), r));
  return out;
}

}  // namespace detail

/// Roots located in the coefficient field, plus the monic cofactor still to be
/// split. Degrees 1 and 2 are solved in closed form (characteristic != 2);
/// higher degrees peel off the root 0 and base-field candidates.
template <FieldElement K>
struct RootSplit {
  std::vector<K> roots;   // distinct
  Polynomial<K> residual; // monic, no roots found in K
};

template <FieldElement K>
RootSplit<K> find_roots(const Polynomial<K>& poly) {
  if (poly.is_zero()) throw std::domain_error("roots of the zero polynomial");
  const K zero = poly.zero_element();
  RootSplit<K> out{{}, poly.monic()};
  auto push_unique = [&](const K& r) {
    for (const auto& existing : out.roots) {
      if (existing == r) return;
    }
    out.roots.push_back(r);
  };
  auto strip = [&](const K& r) {
    const Polynomial<K> lin(std::vector<K>{-r, zero.one_like()}, zero);
    while (out.residual.degree() >= 1 && out.residual.evaluate(r).is_zero()) out.residual = out.residual / lin;
    push_unique(r);
  };
  bool searched = false;
  while (out.residual.degree() >= 1) {
    const Polynomial<K>& f = out.residual;
    if (f.degree() == 1) {
      strip(-f.coeff(0));
      continue;
    }
    if (f.coeff(0).is_zero()) {
      strip(zero);
      continue;
    }
    if (f.degree() == 2 && zero.characteristic() != 2) {
      const K two = zero.integer_like(2);
      const K disc = f.coeff(1) * f.coeff(1) - zero.integer_like(4) * f.coeff(0);
      const auto s = field_sqrt(disc);
      if (!s) break;
      const K r1 = (-f.coeff(1) + *s) / two;
      const K r2 = (-f.coeff(1) - *s) / two;
      strip(r1);
      if (out.residual.degree() >= 1) strip(r2);
      continue;
    }
    if (searched) break;
    searched = true;
    bool found = false;
    for (const auto& c : detail::root_candidates(f)) {
      if (out.residual.degree() >= 1 && out.residual.evaluate(c).is_zero()) {
        strip(c);
        found = true;
        if (out.residual.degree() <= 2) break;
      }
    }
    if (found) searched = false;
    if (!found) break;
  }
  return out;
}

}  // namespace polarmm
