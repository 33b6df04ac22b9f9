#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polarmm/field.hpp"
#include "polarmm/polynomial.hpp"
#include "polarmm/roots.hpp"

namespace polarmm {

/// O or an affine point (x, y).
template <FieldElement K>
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(K x, K y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return !coords_.has_value(); }
  const K& x() const { return coords().first; }
  const K& y() const { return coords().second; }

  std::string to_string() const {
    if (is_infinity()) return "O";
    return "(" + x().to_string() + ", " + y().to_string() + ")";
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }

 private:
  CurvePoint() = default;
  CurvePoint(K x, K y) : coords_(std::make_pair(std::move(x), std::move(y))) {}
  const std::pair<K, K>& coords() const {
    if (!coords_) throw std::logic_error("affine coordinate of the point at infinity");
    return *coords_;
  }
  std::optional<std::pair<K, K>> coords_;
};

/// Short Weierstrass curve y² = x³ + a x + b. `cm_unit`, when present, is an
/// element ι with ι² = −1 and the curve has b = 0, so that
/// [i](x, y) = (−x, ι y) is an automorphism.
template <FieldElement K>
class EllipticCurve {
 public:
  EllipticCurve(K a, K b, std::optional<K> cm_unit = std::nullopt)
      : a_(std::move(a)), b_(std::move(b)), cm_unit_(std::move(cm_unit)) {
    const K disc = a_.integer_like(4) * a_ * a_ * a_ + a_.integer_like(27) * b_ * b_;
    if (disc.is_zero()) throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
    if (a_.characteristic() == 2 || a_.characteristic() == 3) {
      throw std::invalid_argument("short Weierstrass models need characteristic other than 2 and 3");
    }
    if (cm_unit_) {
      if (!b_.is_zero()) throw std::invalid_argument("CM by Z[i] needs a curve y^2 = x^3 + a x");
      if (!(*cm_unit_ * *cm_unit_ == -a_.one_like())) throw std::invalid_argument("CM unit must square to -1");
    }
  }

  const K& a() const { return a_; }
  const K& b() const { return b_; }
  const std::optional<K>& cm_unit() const { return cm_unit_; }
  bool has_cm() const { return cm_unit_.has_value(); }
  K zero_element() const { return a_.zero_like(); }

  /// x³ + a x + b.
  Polynomial<K> rhs_polynomial() const {
    const K z = a_.zero_like();
    return Polynomial<K>(std::vector<K>{b_, a_, z, z.one_like()}, z);
  }
  K rhs(const K& x) const { return x * x * x + a_ * x + b_; }

  bool contains(const CurvePoint<K>& p) const { return p.is_infinity() || p.y() * p.y() == rhs(p.x()); }

  CurvePoint<K> negate(const CurvePoint<K>& p) const {
    if (p.is_infinity()) return p;
    return CurvePoint<K>::affine(p.x(), -p.y());
  }

  /// Chord-tangent law.
  CurvePoint<K> add(const CurvePoint<K>& p, const CurvePoint<K>& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    K slope = a_.zero_like();
    if (p.x() == q.x()) {
      if ((p.y() + q.y()).is_zero()) return CurvePoint<K>::infinity();
      slope = (a_.integer_like(3) * p.x() * p.x() + a_) / (a_.integer_like(2) * p.y());
    } else {
      slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    K x3 = slope * slope - p.x() - q.x();
    K y3 = slope * (p.x() - x3) - p.y();
    return CurvePoint<K>::affine(std::move(x3), std::move(y3));
  }

  CurvePoint<K> multiply(const CurvePoint<K>& p, std::int64_t n) const {
    CurvePoint<K> base = n < 0 ? negate(p) : p;
    auto k = static_cast<std::uint64_t>(n < 0 ? -n : n);
    CurvePoint<K> acc = CurvePoint<K>::infinity();
    while (k > 0) {
      if (k & 1U) acc = add(acc, base);
      k >>= 1U;
      if (k > 0) base = add(base, base);
    }
    return acc;
  }

  /// [i](x, y) = (−x, ι y).
  CurvePoint<K> cm_action(const CurvePoint<K>& p) const {
    if (!cm_unit_) throw std::domain_error("curve carries no CM action by Z[i]");
    if (p.is_infinity()) return p;
    return CurvePoint<K>::affine(-p.x(), *cm_unit_ * p.y());
  }

  std::string to_string() const {
    return "y^2 = x^3 + (" + a_.to_string() + ")*x + (" + b_.to_string() + ")";
  }

 private:
  K a_;
  K b_;
  std::optional<K> cm_unit_;
};

/// Points of order dividing 2: O and (r, 0) for each root r of x³ + a x + b.
/// Throws std::domain_error when the cubic does not split over the base field.
template <FieldElement K>
std::vector<CurvePoint<K>> two_torsion(const EllipticCurve<K>& curve) {
  const RootSplit<K> split = find_roots(curve.rhs_polynomial());
  if (split.residual.degree() > 0 || split.roots.size() != 3) {
    throw std::domain_error("x^3 + a x + b does not split over the base field; adjoin its roots first");
  }
  std::vector<CurvePoint<K>> out{CurvePoint<K>::infinity()};
  for (const auto& r : split.roots) out.push_back(CurvePoint<K>::affine(r, curve.zero_element()));
  return out;
}

/// Maps curve coefficients (and the CM unit) into a field containing K.
template <FieldElement K, FieldElement L, class Embed>
EllipticCurve<L> base_change(const EllipticCurve<K>& curve, Embed&& embed) {
  std::optional<L> unit;
  if (curve.cm_unit()) unit = embed(*curve.cm_unit());
  return EllipticCurve<L>(embed(curve.a()), embed(curve.b()), unit);
}

/// Every point of E(𝔽_p), O first, by scanning x and extracting square roots.
inline std::vector<CurvePoint<PrimeFieldElement>> enumerate_points(const EllipticCurve<PrimeFieldElement>& curve) {
  const std::uint64_t p = curve.a().modulus();
  std::vector<CurvePoint<PrimeFieldElement>> out{CurvePoint<PrimeFieldElement>::infinity()};
  for (std::uint64_t v = 0; v < p; ++v) {
    const PrimeFieldElement x(static_cast<std::int64_t>(v), p);
    const PrimeFieldElement r = curve.rhs(x);
    if (r.is_zero()) {
      out.push_back(CurvePoint<PrimeFieldElement>::affine(x, r));
      continue;
    }
    if (r.legendre() != 1) continue;
    const PrimeFieldElement y = *field_sqrt(r);
    out.push_back(CurvePoint<PrimeFieldElement>::affine(x, y));
    out.push_back(CurvePoint<PrimeFieldElement>::affine(x, -y));
  }
  return out;
}

}  // namespace polarmm
