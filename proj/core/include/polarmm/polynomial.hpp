#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polarmm/field.hpp"

namespace polarmm {

/// Dense univariate polynomial over a field, coefficients in ascending order
/// with no trailing zeros. A zero element of the field is kept alongside the
/// coefficients so that the zero polynomial still knows its field.
template <FieldElement K>
class Polynomial {
 public:
  explicit Polynomial(K zero) : zero_(zero.zero_like()) {}
  Polynomial(std::vector<K> coeffs, K like) : coeffs_(std::move(coeffs)), zero_(like.zero_like()) { trim(); }

  /// Requires a non-empty coefficient list.
  explicit Polynomial(std::vector<K> coeffs) : Polynomial(coeffs, first_of(coeffs)) {}

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}, c); }
  static Polynomial monomial(const K& c, std::size_t k) {
    std::vector<K> v(k + 1, c.zero_like());
    v[k] = c;
    return Polynomial(std::move(v), c);
  }
  static Polynomial variable(const K& like) { return monomial(like.one_like(), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<K>& coefficients() const { return coeffs_; }
  const K& coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
  const K& leading() const { return coeffs_.empty() ? zero_ : coeffs_.back(); }
  const K& zero_element() const { return zero_; }
  bool is_monic() const { return !coeffs_.empty() && is_one(coeffs_.back()); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().one_like() / leading();
  }

  K evaluate(const K& x) const {
    K acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluates at an element of another field, mapping each coefficient with
  /// `embed` first (e.g. a number-field polynomial at a point of an extension).
  template <class L, class Embed>
  L evaluate_mapped(const L& x, Embed&& embed) const {
    L acc = x.zero_like();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  template <FieldElement L, class Fn>
  Polynomial<L> map_coefficients(const L& like, Fn&& fn) const {
    std::vector<L> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return Polynomial<L>(std::move(out), like);
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(zero_);
    std::vector<K> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      out.push_back(coeffs_[k] * zero_.integer_like(static_cast<std::int64_t>(k)));
    }
    return Polynomial(std::move(out), zero_);
  }

  /// f(g(x)).
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc(zero_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<K> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Polynomial(std::move(out), zero_);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator*(const Polynomial& a, const K& c) {
    std::vector<K> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator/(const Polynomial& a, const K& c) {
    if (c.is_zero()) throw std::domain_error("polynomial divided by zero scalar");
    return a * (c.one_like() / c);
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (q, r) with a = q·b + r, deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(a.zero_), a};
    std::vector<K> quot(static_cast<std::size_t>(a.degree() - db + 1), a.zero_);
    const K inv_lead = b.leading().one_like() / b.leading();
    for (int k = a.degree(); k >= db; --k) {
      const auto uk = static_cast<std::size_t>(k);
      if (rem[uk].is_zero()) continue;
      const K factor = rem[uk] * inv_lead;
      const auto shift = static_cast<std::size_t>(k - db);
      quot[shift] = factor;
      for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j) rem[shift + j] = rem[shift + j] - factor * b.coeffs_[j];
    }
    rem.resize(static_cast<std::size_t>(db), a.zero_);
    return {Polynomial(std::move(quot), a.zero_), Polynomial(std::move(rem), a.zero_)};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Human-readable form in descending powers, e.g. "(3)*x^2 + (1)".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const auto& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (k >= 1) out += "*" + var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static const K& first_of(const std::vector<K>& v) {
    if (v.empty()) throw std::invalid_argument("polynomial needs a field element to fix its field");
    return v.front();
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
  K zero_;
};

/// Monic gcd (zero when both inputs are zero).
template <FieldElement K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s·a + t·b = g, g monic.
template <FieldElement K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> extended_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  const K zero = a.zero_element();
  Polynomial<K> r0 = a, r1 = b;
  Polynomial<K> s0 = Polynomial<K>::constant(zero.one_like()), s1(zero);
  Polynomial<K> t0(zero), t1 = Polynomial<K>::constant(zero.one_like());
  while (!r1.is_zero()) {
    auto [q, r] = Polynomial<K>::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = r0.leading().one_like() / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Product of the distinct monic irreducible factors, for characteristic
/// zero or for polynomials whose derivative is nonzero.
template <FieldElement K>
Polynomial<K> squarefree_part(const Polynomial<K>& f) {
  if (f.degree() <= 0) return f.monic();
  const Polynomial<K> df = f.derivative();
  if (df.is_zero()) throw std::domain_error("squarefree part of an inseparable polynomial is not supported");
  return (f / gcd(f, df)).monic();
}

template <FieldElement K>
Polynomial<K> power(const Polynomial<K>& base, std::uint64_t e) {
  Polynomial<K> acc = Polynomial<K>::constant(base.zero_element().one_like());
  Polynomial<K> b = base;
  while (e > 0) {
    if (e & 1U) acc = acc * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return acc;
}

}  // namespace polarmm
