#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polarmm/field.hpp"
#include "polarmm/polynomial.hpp"

namespace polarmm {

/// Simple algebraic extension B[t]/(f) with f monic. Irreducibility is the
/// caller's responsibility; a reducible modulus surfaces as a failed inverse.
template <FieldElement B>
class ExtensionField {
 public:
  ExtensionField(Polynomial<B> modulus, std::optional<Polynomial<B>> conjugation, std::string name,
                 std::string generator = "w")
      : modulus_(std::move(modulus)),
        conjugation_(std::move(conjugation)),
        name_(std::move(name)),
        generator_(std::move(generator)) {
    if (modulus_.degree() < 1) throw std::invalid_argument("extension modulus must have degree >= 1");
    if (!modulus_.is_monic()) throw std::invalid_argument("extension modulus must be monic");
  }

  const Polynomial<B>& modulus() const { return modulus_; }
  const std::optional<Polynomial<B>>& conjugation() const { return conjugation_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  const std::string& name() const { return name_; }
  const std::string& generator() const { return generator_; }
  const B& base_zero() const { return modulus_.zero_element(); }

  /// t² = e form, which the square-root routine needs.
  bool is_pure_quadratic() const { return degree() == 2 && modulus_.coeff(1).is_zero(); }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) { return a.modulus_ == b.modulus_; }

 private:
  Polynomial<B> modulus_;
  std::optional<Polynomial<B>> conjugation_;
  std::string name_;
  std::string generator_;
};

template <FieldElement B>
using ExtensionFieldPtr = std::shared_ptr<const ExtensionField<B>>;

/// Element of B[t]/(f) on the power basis 1, t, ..., t^(g-1).
template <FieldElement B>
class ExtElement {
 public:
  using base_type = B;

  ExtElement(ExtensionFieldPtr<B> field, std::vector<B> coeffs) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("extension element without a field");
    set_from(Polynomial<B>(std::move(coeffs), field_->base_zero()));
  }
  ExtElement(ExtensionFieldPtr<B> field, const Polynomial<B>& poly) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("extension element without a field");
    set_from(poly);
  }

  static ExtElement constant(const ExtensionFieldPtr<B>& field, const B& c) { return ExtElement(field, std::vector<B>{c}); }
  static ExtElement generator(const ExtensionFieldPtr<B>& field) {
    return ExtElement(field, Polynomial<B>::variable(field->base_zero()));
  }

  const ExtensionFieldPtr<B>& field() const { return field_; }
  const std::vector<B>& coefficients() const { return coeffs_; }
  const B& coeff(std::size_t k) const { return coeffs_.at(k); }
  Polynomial<B> as_polynomial() const { return Polynomial<B>(coeffs_, field_->base_zero()); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  /// True when every non-constant coordinate vanishes.
  bool is_base() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) return false;
    }
    return true;
  }

  ExtElement zero_like() const { return constant(field_, field_->base_zero()); }
  ExtElement one_like() const { return constant(field_, field_->base_zero().one_like()); }
  ExtElement integer_like(std::int64_t n) const { return constant(field_, field_->base_zero().integer_like(n)); }
  std::uint64_t characteristic() const { return field_->base_zero().characteristic(); }

  ExtElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + field_->name());
    auto [g, s, t] = extended_gcd(as_polynomial(), field_->modulus());
    if (g.degree() != 0) {
      throw std::domain_error("element is a zero divisor modulo the modulus of " + field_->name() +
                              " (modulus is reducible)");
    }
    return ExtElement(field_, s);
  }

  /// Image under the field's designated involution (generator ↦ conjugation image).
  ExtElement conjugate() const {
    if (!field_->conjugation()) throw std::domain_error(field_->name() + " has no conjugation");
    const ExtElement image(field_, *field_->conjugation());
    ExtElement acc = zero_like();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * image + constant(field_, *it);
    return acc;
  }

  ExtElement operator-() const {
    std::vector<B> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return ExtElement(field_, std::move(out));
  }
  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    a.check_same(b);
    std::vector<B> out(a.coeffs_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + b.coeffs_[k];
    return ExtElement(a.field_, std::move(out), Reduced{});
  }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    a.check_same(b);
    std::vector<B> out(a.coeffs_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - b.coeffs_[k];
    return ExtElement(a.field_, std::move(out), Reduced{});
  }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    a.check_same(b);
    return ExtElement(a.field_, a.as_polynomial() * b.as_polynomial());
  }
  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) {
    a.check_same(b);
    return a * b.inverse();
  }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.same_field(b) && a.coeffs_ == b.coeffs_;
  }

  bool same_field(const ExtElement& o) const { return field_ == o.field_ || *field_ == *o.field_; }

  /// Polynomial in the generator, e.g. "4+3*w+12*w^2".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      std::string c = coeffs_[k].to_string();
      if (k > 0 && c.find_first_of("+*", 1) != std::string::npos) c = "(" + c + ")";
      std::string term = k == 0 ? c : c + "*" + field_->generator() + (k > 1 ? "^" + std::to_string(k) : "");
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  struct Reduced {};
  ExtElement(ExtensionFieldPtr<B> field, std::vector<B> coeffs, Reduced) : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  void set_from(const Polynomial<B>& poly) {
    const Polynomial<B> r = poly.degree() >= static_cast<int>(field_->degree()) ? poly % field_->modulus() : poly;
    coeffs_.assign(field_->degree(), field_->base_zero());
    for (std::size_t k = 0; k < r.coefficients().size(); ++k) coeffs_[k] = r.coefficients()[k];
  }
  void check_same(const ExtElement& o) const {
    if (!same_field(o)) {
      throw std::invalid_argument("mixed-field operands: " + field_->name() + " and " + o.field_->name());
    }
  }

  ExtensionFieldPtr<B> field_;
  std::vector<B> coeffs_;
};

template <class T>
struct is_ext_element : std::false_type {};
template <class B>
struct is_ext_element<ExtElement<B>> : std::true_type {};

/// Embeds an element of a subfield of a tower into the field of `like`.
template <FieldElement K>
K lift(const K& k, const K&) {
  return k;
}

template <FieldElement K, FieldElement B>
  requires(!std::is_same_v<K, ExtElement<B>>)
ExtElement<B> lift(const K& k, const ExtElement<B>& like) {
  return ExtElement<B>::constant(like.field(), lift(k, like.field()->base_zero()));
}

/// The image of t under the trivial extension B[t]/(t) is zero; trivial
/// extensions keep tower types uniform when no genuine extension is needed.
template <FieldElement B>
ExtensionFieldPtr<B> trivial_extension(const B& like, std::string name = "trivial") {
  return std::make_shared<const ExtensionField<B>>(Polynomial<B>::variable(like), std::nullopt, std::move(name), "t");
}

/// Result of adjoining a root of a polynomial of degree 1 or 2.
template <FieldElement B>
struct AdjoinedRoot {
  ExtensionFieldPtr<B> field;
  ExtElement<B> root;
};

/// Adjoins a root of `poly` (degree 1 or 2, characteristic != 2). Quadratics
/// are completed to the pure form t² = e so that square roots stay available
/// further up the tower.
template <FieldElement B>
AdjoinedRoot<B> adjoin_root(const Polynomial<B>& poly, std::string name) {
  const Polynomial<B> f = poly.monic();
  const B zero = f.zero_element();
  if (f.degree() == 1) {
    auto field = trivial_extension(zero, std::move(name));
    return {field, ExtElement<B>::constant(field, -f.coeff(0))};
  }
  if (f.degree() != 2) throw std::domain_error("adjoin_root supports degree 1 or 2 only");
  if (zero.characteristic() == 2) throw std::domain_error("adjoin_root needs characteristic != 2");
  const B half_b = f.coeff(1) / zero.integer_like(2);
  const B e = half_b * half_b - f.coeff(0);
  auto field = std::make_shared<const ExtensionField<B>>(
      Polynomial<B>(std::vector<B>{-e, zero, zero.one_like()}, zero), std::nullopt, std::move(name), "t");
  return {field, ExtElement<B>::generator(field) - ExtElement<B>::constant(field, half_b)};
}

/// Square root inside a tower of degree-1 and pure-quadratic extensions whose
/// bottom field has its own `field_sqrt`.
template <FieldElement B>
std::optional<ExtElement<B>> field_sqrt(const ExtElement<B>& a) {
  const auto& field = a.field();
  auto wrap = [&](const B& c) { return ExtElement<B>::constant(field, c); };
  if (a.is_zero()) return a;
  if (field->degree() == 1) {
    auto r = field_sqrt(a.coeff(0));
    if (!r) return std::nullopt;
    return wrap(*r);
  }
  if (!field->is_pure_quadratic()) {
    throw std::domain_error("square roots in " + field->name() + " need a degree-1 or pure quadratic modulus");
  }
  const B e = -field->modulus().coeff(0);
  const B& c0 = a.coeff(0);
  const B& c1 = a.coeff(1);
  const B two = c0.integer_like(2);
  const auto t = ExtElement<B>::generator(field);
  // (u + v t)² = u² + v² e + 2uv t.
  if (c1.is_zero()) {
    if (auto u = field_sqrt(c0)) return wrap(*u);
    if (auto v = field_sqrt(c0 / e)) return wrap(*v) * t;
    return std::nullopt;
  }
  const auto disc = field_sqrt(c0 * c0 - c1 * c1 * e);
  if (!disc) return std::nullopt;
  for (const B& u_sq : {(c0 + *disc) / two, (c0 - *disc) / two}) {
    auto u = field_sqrt(u_sq);
    if (!u || u->is_zero()) continue;
    const B v = c1 / (two * *u);
    ExtElement<B> candidate = wrap(*u) + wrap(v) * t;
    if (candidate * candidate == a) return candidate;
  }
  return std::nullopt;
}

/// Rational value of an element lying in the prime subfield ℚ, if any.
template <FieldElement B>
auto as_rational(const ExtElement<B>& a) -> decltype(as_rational(a.coeff(0))) {
  if (!a.is_base()) return std::nullopt;
  return as_rational(a.coeff(0));
}

}  // namespace polarmm
