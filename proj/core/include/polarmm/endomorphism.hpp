#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "polarmm/curve_function.hpp"
#include "polarmm/elliptic_curve.hpp"
#include "polarmm/extension_field.hpp"
#include "polarmm/gaussian_integer.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/rational_function.hpp"
#include "polarmm/roots.hpp"

namespace polarmm {

/// y² = x³ + x over ℚ(i) with [i](x, y) = (−x, i·y).
EllipticCurve<NumberFieldElement> gaussian_cm_curve();

/// Multiplication by a + b·i on a curve; b ≠ 0 needs the CM unit.
template <FieldElement K>
class Endomorphism {
 public:
  Endomorphism(EllipticCurve<K> curve, GaussianInteger multiplier)
      : curve_(std::move(curve)), multiplier_(std::move(multiplier)) {
    if (multiplier_.is_zero()) throw std::invalid_argument("the zero multiplier is not an isogeny");
    if (multiplier_.im() != 0 && !curve_.has_cm()) {
      throw std::domain_error("multiplier " + multiplier_.to_string() + " needs a curve with CM by Z[i]");
    }
  }

  const EllipticCurve<K>& curve() const { return curve_; }
  const GaussianInteger& multiplier() const { return multiplier_; }
  /// Norm of the multiplier.
  mpz_class degree() const { return multiplier_.norm(); }
  Endomorphism conjugate() const { return Endomorphism(curve_, multiplier_.conjugate()); }

  /// [a]P + [b]([i]P).
  CurvePoint<K> operator()(const CurvePoint<K>& p) const {
    CurvePoint<K> out = curve_.multiply(p, multiplier_.re64());
    if (multiplier_.im() != 0) out = curve_.add(out, curve_.multiply(curve_.cm_action(p), multiplier_.im64()));
    return out;
  }

  template <FieldElement L, class Embed>
  Endomorphism<L> base_change(Embed&& embed) const {
    return Endomorphism<L>(polarmm::base_change<K, L>(curve_, embed), multiplier_);
  }

  std::string to_string() const { return "[" + multiplier_.to_string() + "] on " + curve_.to_string(); }

 private:
  EllipticCurve<K> curve_;
  GaussianInteger multiplier_;
};

template <FieldElement K>
CurvePoint<K> evaluate_endomorphism(const Endomorphism<K>& f, const CurvePoint<K>& p) {
  return f(p);
}

/// f(x, y) = (X(x), Y(x)·y) at the generic point.
template <FieldElement K>
struct SymbolicImage {
  RationalFunction<K> x_map;
  RationalFunction<K> y_factor;
};

/// Runs the group law on the generic point (x, y) of the function field.
template <FieldElement K>
SymbolicImage<K> symbolic_image(const Endomorphism<K>& f) {
  using F = CurveFunction<K>;
  const F gx = F::x(f.curve());
  const F gy = F::y(f.curve());
  const Endomorphism<F> generic = f.template base_change<F>([&](const K& k) { return gx.constant(k); });
  const CurvePoint<F> image = generic(CurvePoint<F>::affine(gx, gy));
  if (image.is_infinity()) throw std::logic_error("nonzero endomorphism sent the generic point to O");
  if (!image.x().is_y_free()) throw std::logic_error("y-term survived in the x-coordinate of " + f.to_string());
  if (!image.y().u().is_zero()) throw std::logic_error("y-coordinate of " + f.to_string() + " is not odd in y");
  return {image.x().u(), image.y().v()};
}

/// Monic polynomial whose roots are the x-coordinates of the nonzero kernel
/// points: the radical of the x-map's denominator.
template <FieldElement K>
Polynomial<K> kernel_x_polynomial(const RationalFunction<K>& x_map) {
  return squarefree_part(x_map.denominator());
}

/// Tower K ⊂ K(ξ) ⊂ K(ξ, η) holding the kernel points.
template <FieldElement K>
using KernelElement = ExtElement<ExtElement<K>>;

template <FieldElement K>
struct KernelResult {
  Polynomial<K> x_polynomial;
  bool points_available = false;
  std::string unavailable_reason{};
  std::size_t extension_degree = 1;
  std::optional<EllipticCurve<KernelElement<K>>> curve{};  // base change to the tower
  std::vector<CurvePoint<KernelElement<K>>> points{};       // O first
};

/// Kernel from the x-polynomial. Points are listed when the nonlinear part of
/// the x-polynomial is a single quadratic and the y-coordinates fit in one
/// further quadratic extension.
template <FieldElement K>
KernelResult<K> kernel(const Endomorphism<K>& f, const RationalFunction<K>& x_map) {
  using L1 = ExtElement<K>;
  using L2 = ExtElement<L1>;
  KernelResult<K> out{.x_polynomial = kernel_x_polynomial(x_map)};
  const EllipticCurve<K>& curve = f.curve();
  const K zero = curve.zero_element();

  const RootSplit<K> split = find_roots(out.x_polynomial);
  const Polynomial<K>& residual = split.residual;
  if (residual.degree() > 2) {
    out.unavailable_reason = "kernel x-polynomial keeps a factor of degree " + std::to_string(residual.degree()) +
                             " without roots in the base field";
    return out;
  }
  const AdjoinedRoot<K> xi = adjoin_root(residual.degree() == 2 ? residual : Polynomial<K>::variable(zero), "Kx");
  const L1 like1 = L1::constant(xi.field, zero);
  std::vector<L1> xs;
  for (const K& r : split.roots) xs.push_back(lift(r, like1));
  if (residual.degree() == 2) {
    xs.push_back(xi.root);
    xs.push_back(L1::constant(xi.field, -residual.coeff(1)) - xi.root);
  }

  const EllipticCurve<L1> curve1 = base_change<K, L1>(curve, [&](const K& k) { return lift(k, like1); });
  std::optional<L1> nonsquare;
  for (const L1& x : xs) {
    const L1 c = curve1.rhs(x);
    if (!c.is_zero() && !field_sqrt(c)) {
      nonsquare = c;
      break;
    }
  }
  const AdjoinedRoot<L1> eta =
      nonsquare ? adjoin_root(Polynomial<L1>(std::vector<L1>{-*nonsquare, like1, like1.one_like()}, like1), "Ky")
                : adjoin_root(Polynomial<L1>::variable(like1), "Ky");
  const L2 like2 = L2::constant(eta.field, like1);
  out.extension_degree = xi.field->degree() * eta.field->degree();
  const EllipticCurve<L2> curve2 = base_change<K, L2>(curve, [&](const K& k) { return lift(k, like2); });

  std::vector<CurvePoint<L2>> points{CurvePoint<L2>::infinity()};
  for (const L1& x1 : xs) {
    const L2 x = lift(x1, like2);
    const L2 c = curve2.rhs(x);
    if (c.is_zero()) {
      points.push_back(CurvePoint<L2>::affine(x, c));
      continue;
    }
    const auto y = field_sqrt(c);
    if (!y) {
      out.unavailable_reason = "y-coordinates of the kernel need more than one quadratic extension";
      return out;
    }
    points.push_back(CurvePoint<L2>::affine(x, *y));
    points.push_back(CurvePoint<L2>::affine(x, -*y));
  }
  if (mpz_class(static_cast<unsigned long>(points.size())) != f.degree()) {
    out.unavailable_reason = "found " + std::to_string(points.size()) + " kernel points, expected degree " +
                             f.degree().get_str() + " (inseparable isogeny?)";
    return out;
  }
  const Endomorphism<L2> f2 = f.template base_change<L2>([&](const K& k) { return lift(k, like2); });
  for (const auto& p : points) {
    if (!f2(p).is_infinity()) throw std::logic_error("kernel point " + p.to_string() + " is not killed");
  }
  out.points_available = true;
  out.curve = curve2;
  out.points = std::move(points);
  return out;
}

template <FieldElement K>
KernelResult<K> kernel(const Endomorphism<K>& f) {
  return kernel(f, symbolic_image(f).x_map);
}

/// m = Card(E[2] ∩ Ker f) ∈ {1, 2, 4}; f*(O) ∼ d(O) iff m ≠ 2.
/// Characteristic zero only.
template <FieldElement K>
PolarizationCertificate two_torsion_criterion(const Endomorphism<K>& f) {
  if (f.curve().zero_element().characteristic() != 0) {
    throw std::domain_error("the two-torsion criterion is stated in characteristic zero only");
  }
  unsigned m = 0;
  for (const auto& t : two_torsion(f.curve())) {
    if (f(t).is_infinity()) ++m;
  }
  if (m != 1 && m != 2 && m != 4) throw std::logic_error("E[2] ∩ Ker f has impossible size " + std::to_string(m));
  PolarizationCertificate cert;
  cert.reason = PolarizationReason::KernelTwoTorsion;
  cert.kernel_two_torsion = m;
  cert.polarized = m != 2;
  if (cert.polarized) cert.weight = f.degree();
  cert.diagnostics = "Card(E[2] ∩ Ker f) = " + std::to_string(m) + (cert.polarized ? ", f*(O) ~ d(O)" : ", f*(O) - d(O) is not principal");
  return cert;
}

struct DivisorSumReport {
  bool principal = false;
  std::string method;            // "kernel-points" or "reduction"
  std::optional<std::uint64_t> prime;  // for the reduction method
  std::size_t kernel_size = 0;
  std::string sum;               // the point sum, printed
};

namespace detail {
DivisorSumReport divisor_sum_by_reduction(const Endomorphism<NumberFieldElement>& f, std::uint64_t prime_bound);
}

/// f*(O) − d(O) is principal iff the kernel points sum to O. Uses the
/// kernel tower when it is available; over ℚ(i) it otherwise reduces modulo
/// a split prime p ∤ 2d where the whole kernel is 𝔽_p-rational, which is
/// faithful because reduction is injective on prime-to-p torsion.
template <FieldElement K>
DivisorSumReport divisor_sum_oracle(const Endomorphism<K>& f, std::uint64_t prime_bound = 10000) {
  const KernelResult<K> ker = kernel(f);
  if (ker.points_available) {
    CurvePoint<KernelElement<K>> sum = CurvePoint<KernelElement<K>>::infinity();
    for (const auto& p : ker.points) sum = ker.curve->add(sum, p);
    DivisorSumReport out;
    out.principal = sum.is_infinity();
    out.method = "kernel-points";
    out.kernel_size = ker.points.size();
    out.sum = sum.to_string();
    return out;
  }
  if constexpr (std::is_same_v<K, NumberFieldElement>) {
    return detail::divisor_sum_by_reduction(f, prime_bound);
  } else {
    throw std::domain_error("kernel points unavailable: " + ker.unavailable_reason);
  }
}

}  // namespace polarmm
