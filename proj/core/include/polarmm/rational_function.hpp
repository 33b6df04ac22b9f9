#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polarmm/field.hpp"
#include "polarmm/polynomial.hpp"

namespace polarmm {

/// A point of ℙ¹: an affine value or ∞.
template <FieldElement K>
class ProjectivePoint {
 public:
  static ProjectivePoint infinity() { return ProjectivePoint(); }
  static ProjectivePoint affine(K value) { return ProjectivePoint(std::move(value)); }

  bool is_infinity() const { return !value_.has_value(); }
  const K& value() const {
    if (!value_) throw std::logic_error("value() of the point at infinity");
    return *value_;
  }
  std::string to_string() const { return value_ ? value_->to_string() : std::string("inf"); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.value_ == *b.value_;
  }

 private:
  ProjectivePoint() = default;
  explicit ProjectivePoint(K v) : value_(std::move(v)) {}
  std::optional<K> value_;
};

/// Quotient of polynomials in canonical form: coprime, denominator monic.
template <FieldElement K>
class RationalFunction {
 public:
  RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    const Polynomial<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    normalize();
  }

  /// Skips the gcd; the caller guarantees coprimality (e.g. composition of
  /// canonical maps, whose homogeneous forms share no zero on ℙ¹).
  static RationalFunction from_coprime(Polynomial<K> num, Polynomial<K> den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction r(std::move(num), std::move(den), Trusted{});
    r.normalize();
    return r;
  }

  static RationalFunction from_polynomial(const Polynomial<K>& p) {
    return from_coprime(p, Polynomial<K>::constant(p.zero_element().one_like()));
  }
  static RationalFunction constant(const K& c) { return from_polynomial(Polynomial<K>::constant(c)); }
  static RationalFunction identity(const K& like) { return from_polynomial(Polynomial<K>::variable(like)); }

  const Polynomial<K>& numerator() const { return num_; }
  const Polynomial<K>& denominator() const { return den_; }
  const K& zero_element() const { return num_.zero_element(); }
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator-() const { return from_coprime(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    // Cross-cancel first so the products stay small.
    const Polynomial<K> g1 = gcd(a.num_, b.den_);
    const Polynomial<K> g2 = gcd(b.num_, a.den_);
    return from_coprime((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function divided by zero");
    return a * RationalFunction(b.den_, b.num_, Trusted{}).normalized();
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// this ∘ inner.
  RationalFunction compose(const RationalFunction& inner) const {
    const int d = degree();
    if (d == 0) return *this;
    const K zero = zero_element();
    Polynomial<K> num(zero), den(zero);
    // Σ c_k R^k S^(d-k) via precomputed powers of R = inner numerator, S = inner denominator.
    std::vector<Polynomial<K>> r_pow{Polynomial<K>::constant(zero.one_like())};
    std::vector<Polynomial<K>> s_pow{Polynomial<K>::constant(zero.one_like())};
    for (int k = 1; k <= d; ++k) {
      r_pow.push_back(r_pow.back() * inner.num_);
      s_pow.push_back(s_pow.back() * inner.den_);
    }
    for (int k = 0; k <= d; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const Polynomial<K> basis = r_pow[uk] * s_pow[static_cast<std::size_t>(d - k)];
      if (!num_.coeff(uk).is_zero()) num = num + basis * num_.coeff(uk);
      if (!den_.coeff(uk).is_zero()) den = den + basis * den_.coeff(uk);
    }
    return from_coprime(std::move(num), std::move(den));
  }

  /// Value at a point of ℙ¹; poles map to ∞.
  ProjectivePoint<K> evaluate(const ProjectivePoint<K>& p) const {
    if (p.is_infinity()) return at_infinity();
    const K d = den_.evaluate(p.value());
    if (d.is_zero()) return ProjectivePoint<K>::infinity();
    return ProjectivePoint<K>::affine(num_.evaluate(p.value()) / d);
  }

  /// Value at a point of an extension field, mapping coefficients with `embed`.
  template <class L, class Embed>
  ProjectivePoint<L> evaluate_mapped(const ProjectivePoint<L>& p, Embed&& embed) const {
    if (p.is_infinity()) {
      if (num_.degree() > den_.degree()) return ProjectivePoint<L>::infinity();
      if (num_.degree() < den_.degree()) return ProjectivePoint<L>::affine(embed(zero_element()));
      return ProjectivePoint<L>::affine(embed(num_.leading() / den_.leading()));
    }
    const L d = den_.evaluate_mapped(p.value(), embed);
    if (d.is_zero()) return ProjectivePoint<L>::infinity();
    return ProjectivePoint<L>::affine(num_.evaluate_mapped(p.value(), embed) / d);
  }

  ProjectivePoint<K> at_infinity() const {
    if (num_.degree() > den_.degree()) return ProjectivePoint<K>::infinity();
    if (num_.degree() < den_.degree()) return ProjectivePoint<K>::affine(zero_element());
    return ProjectivePoint<K>::affine(num_.leading() / den_.leading());
  }

  template <FieldElement L, class Fn>
  RationalFunction<L> map_coefficients(const L& like, Fn&& fn) const {
    return RationalFunction<L>(num_.map_coefficients(like, fn), den_.map_coefficients(like, fn));
  }

  std::string to_string(const std::string& var = "x") const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  struct Trusted {};
  RationalFunction(Polynomial<K> num, Polynomial<K> den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  RationalFunction normalized() const {
    RationalFunction r = *this;
    r.normalize();
    return r;
  }
  void normalize() {
    const K lead = den_.leading();
    if (!is_one(lead)) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  Polynomial<K> num_;
  Polynomial<K> den_;
};

/// f∘f∘…∘f (n >= 1 copies).
template <FieldElement K>
RationalFunction<K> iterate(const RationalFunction<K>& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("iterate needs n >= 1");
  RationalFunction<K> acc = f;
  for (unsigned k = 1; k < n; ++k) acc = f.compose(acc);
  return acc;
}

}  // namespace polarmm
