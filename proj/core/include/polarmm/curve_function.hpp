#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "polarmm/elliptic_curve.hpp"
#include "polarmm/rational_function.hpp"

namespace polarmm {

/// Element u(x) + v(x)·y of the function field of y² = c(x), kept reduced so
/// that the pair (u, v) is unique. It models a field, so the generic group law
/// runs on the generic point (x, y) and yields the multiplication maps.
template <FieldElement K>
class CurveFunction {
 public:
  CurveFunction(std::shared_ptr<const Polynomial<K>> rhs, RationalFunction<K> u, RationalFunction<K> v)
      : rhs_(std::move(rhs)), u_(std::move(u)), v_(std::move(v)) {}

  static CurveFunction x(const EllipticCurve<K>& curve) {
    const K z = curve.zero_element();
    return {std::make_shared<const Polynomial<K>>(curve.rhs_polynomial()), RationalFunction<K>::identity(z),
            RationalFunction<K>::constant(z)};
  }
  static CurveFunction y(const EllipticCurve<K>& curve) {
    const K z = curve.zero_element();
    return {std::make_shared<const Polynomial<K>>(curve.rhs_polynomial()), RationalFunction<K>::constant(z),
            RationalFunction<K>::constant(z.one_like())};
  }
  CurveFunction constant(const K& c) const {
    return {rhs_, RationalFunction<K>::constant(c), RationalFunction<K>::constant(c.zero_like())};
  }

  const RationalFunction<K>& u() const { return u_; }
  const RationalFunction<K>& v() const { return v_; }
  bool is_y_free() const { return v_.is_zero(); }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  CurveFunction zero_like() const { return constant(base_zero()); }
  CurveFunction one_like() const { return constant(base_zero().one_like()); }
  CurveFunction integer_like(std::int64_t n) const { return constant(base_zero().integer_like(n)); }
  std::uint64_t characteristic() const { return base_zero().characteristic(); }

  CurveFunction operator-() const { return {rhs_, -u_, -v_}; }
  friend CurveFunction operator+(const CurveFunction& a, const CurveFunction& b) {
    return {a.rhs_, a.u_ + b.u_, a.v_ + b.v_};
  }
  friend CurveFunction operator-(const CurveFunction& a, const CurveFunction& b) {
    return {a.rhs_, a.u_ - b.u_, a.v_ - b.v_};
  }
  friend CurveFunction operator*(const CurveFunction& a, const CurveFunction& b) {
    // (u1 + v1 y)(u2 + v2 y) = u1 u2 + v1 v2 c + (u1 v2 + u2 v1) y.
    const RationalFunction<K> c = a.rhs_function();
    RationalFunction<K> u = a.u_ * b.u_;
    if (!a.v_.is_zero() && !b.v_.is_zero()) u = u + a.v_ * b.v_ * c;
    RationalFunction<K> v = a.u_ * b.v_ + a.v_ * b.u_;
    return {a.rhs_, std::move(u), std::move(v)};
  }
  CurveFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero function");
    if (v_.is_zero()) return {rhs_, RationalFunction<K>::constant(base_zero().one_like()) / u_, v_};
    // (u + v y)⁻¹ = (u − v y) / (u² − v² c).
    const RationalFunction<K> n = u_ * u_ - v_ * v_ * rhs_function();
    return {rhs_, u_ / n, -v_ / n};
  }
  friend CurveFunction operator/(const CurveFunction& a, const CurveFunction& b) { return a * b.inverse(); }
  friend bool operator==(const CurveFunction& a, const CurveFunction& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

  std::string to_string() const {
    if (v_.is_zero()) return u_.to_string();
    return "[" + u_.to_string() + "] + [" + v_.to_string() + "]*y";
  }

 private:
  const K& base_zero() const { return u_.zero_element(); }
  RationalFunction<K> rhs_function() const { return RationalFunction<K>::from_polynomial(*rhs_); }

  std::shared_ptr<const Polynomial<K>> rhs_;
  RationalFunction<K> u_;
  RationalFunction<K> v_;
};

template <FieldElement K>
CurveFunction<K> lift(const K& k, const CurveFunction<K>& like) {
  return like.constant(k);
}

}  // namespace polarmm
