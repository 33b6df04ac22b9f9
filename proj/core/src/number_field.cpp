#include "polarmm/number_field.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "polarmm/roots.hpp"

namespace polarmm {

namespace {

Polynomial<Rational> rational_poly(const std::vector<Rational>& coeffs) {
  return Polynomial<Rational>(coeffs, Rational());
}

bool has_rational_root(const Polynomial<Rational>& f) {
  for (const auto& c : detail::rational_root_candidates(f)) {
    if (f.evaluate(c).is_zero()) return true;
  }
  return false;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

NumberFieldPtr make_number_field(const std::vector<Rational>& modulus, std::optional<std::vector<Rational>> conjugation,
                                 std::string name) {
  const Polynomial<Rational> f = rational_poly(modulus);
  if (f.degree() < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
  if (!f.is_monic()) throw std::invalid_argument("number field modulus must be monic");
  if (f.degree() > 1 && f.degree() <= 4 && has_rational_root(f)) {
    throw std::invalid_argument("number field modulus " + f.to_string() + " has a rational root");
  }
  std::optional<Polynomial<Rational>> conj;
  if (conjugation) {
    conj = rational_poly(*conjugation) % f;
  } else if (f.degree() == 2) {
    // The other root of x² + a x + b is −a − x.
    conj = rational_poly({-f.coeff(1), Rational(-1)});
  }
  auto field = std::make_shared<const NumberField>(f, conj, std::move(name), "w");
  if (conj) {
    const NumberFieldElement w = NumberFieldElement::generator(field);
    const NumberFieldElement image(field, *conj);
    if (!f.evaluate_mapped(image, [&](const Rational& c) { return nf_constant(field, c); }).is_zero()) {
      throw std::invalid_argument("conjugation image is not a root of the modulus");
    }
    if (!(image.conjugate() == w)) throw std::invalid_argument("conjugation is not an involution");
  }
  return field;
}

const NumberFieldPtr& gaussian_field() {
  static const NumberFieldPtr field = make_number_field({1, 0, 1}, std::vector<Rational>{0, -1}, "Qi");
  return field;
}

const NumberFieldPtr& cyclotomic5_field() {
  static const NumberFieldPtr field =
      make_number_field({1, 1, 1, 1, 1}, std::vector<Rational>{0, 0, 0, 0, 1}, "Qzeta5");
  return field;
}

NumberFieldPtr parse_field(std::string_view spec) {
  const std::string s = trim(spec);
  if (s == "Qi") return gaussian_field();
  if (s == "Qzeta5") return cyclotomic5_field();
  if (s.empty() || s.front() != '{') throw std::invalid_argument("unknown field '" + s + "' (expected Qi, Qzeta5 or JSON)");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed field JSON: ") + e.what());
  }
  auto read = [](const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("field coefficients must be a JSON array");
    std::vector<Rational> out;
    for (const auto& v : arr) {
      if (v.is_number_integer()) {
        out.emplace_back(static_cast<long long>(v.get<std::int64_t>()));
      } else if (v.is_string()) {
        out.push_back(Rational::parse(v.get<std::string>()));
      } else {
        throw std::invalid_argument("field coefficients must be integers or rational strings");
      }
    }
    return out;
  };
  if (!j.contains("modulus")) throw std::invalid_argument("field JSON needs a \"modulus\" array");
  std::optional<std::vector<Rational>> conj;
  if (j.contains("conjugation")) conj = read(j["conjugation"]);
  return make_number_field(read(j["modulus"]), conj, j.value("name", std::string("inline")));
}

NumberFieldElement parse_element(const NumberFieldPtr& field, std::string_view literal) {
  std::string s;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty element literal");
  const std::string gen = field->generator();
  std::vector<Rational> coeffs;
  auto malformed = [&](const std::string& why) {
    return std::invalid_argument("malformed element literal '" + std::string(literal) + "': " + why);
  };
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw malformed("expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw malformed("empty term");
    pos = end;

    Rational coef(1);
    std::size_t exponent = 0;
    const auto g = term.find(gen);
    if (g == std::string::npos) {
      coef = Rational::parse(term);
    } else {
      std::string head = term.substr(0, g);
      if (!head.empty()) {
        if (head.back() != '*') throw malformed("expected '*' before generator");
        head.pop_back();
        if (head.empty()) throw malformed("missing coefficient before '*'");
        coef = Rational::parse(head);
      }
      const std::string tail = term.substr(g + gen.size());
      exponent = 1;
      if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) throw malformed("expected '^<exponent>' after generator");
        for (std::size_t k = 1; k < tail.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(tail[k]))) throw malformed("bad exponent");
        }
        exponent = std::stoul(tail.substr(1));
        if (exponent > 4096) throw malformed("exponent too large");
      }
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, Rational());
    coeffs[exponent] += Rational(sign) * coef;
  }
  return NumberFieldElement(field, Polynomial<Rational>(coeffs, Rational()));
}

NumberFieldElement nf_constant(const NumberFieldPtr& field, const Rational& c) {
  return NumberFieldElement::constant(field, c);
}

NumberFieldElement nf_generator(const NumberFieldPtr& field) { return NumberFieldElement::generator(field); }

std::optional<mpz_class> is_rational_integer(const NumberFieldElement& a) {
  if (!a.is_base() || !a.coeff(0).is_integer()) return std::nullopt;
  return a.coeff(0).numerator();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::optional<std::uint64_t> is_root_of_unity(const NumberFieldElement& u) {
  if (u.is_zero()) throw std::domain_error("is_root_of_unity called on zero");
  const std::uint64_t g = u.field()->degree();
  // φ(n) >= sqrt(n/2), so every candidate satisfies n <= 2g².
  const std::uint64_t bound = 2 * g * g + 2;
  NumberFieldElement acc = u.one_like();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    acc = acc * u;
    if (euler_phi(n) <= g && acc == u.one_like()) return n;
  }
  return std::nullopt;
}

NumberFieldElement to_gaussian_element(const GaussianInteger& g) {
  return NumberFieldElement(gaussian_field(), std::vector<Rational>{Rational(g.re()), Rational(g.im())});
}

GaussianInteger to_gaussian_integer(const NumberFieldElement& a) {
  if (!a.same_field(nf_constant(gaussian_field(), 0))) {
    throw std::invalid_argument("expected an element of Qi, got one of " + a.field()->name());
  }
  if (!a.coeff(0).is_integer() || !a.coeff(1).is_integer()) {
    throw std::invalid_argument("multiplier " + a.to_string() + " is not a Gaussian integer");
  }
  return {a.coeff(0).numerator(), a.coeff(1).numerator()};
}

std::optional<PrimeFieldElement> reduce_rational(const Rational& r, std::uint64_t p) {
  const mpz_class pp(static_cast<unsigned long>(p));
  mpz_class den = r.denominator() % pp;
  if (den == 0) return std::nullopt;
  mpz_class num = r.numerator() % pp;
  if (num < 0) num += pp;
  const PrimeFieldElement n(static_cast<std::int64_t>(num.get_ui()), p);
  const PrimeFieldElement d(static_cast<std::int64_t>(den.get_ui()), p);
  return n / d;
}

PrimeFieldElement reduce_element(const NumberFieldElement& a, const PrimeFieldElement& generator_image) {
  const std::uint64_t p = generator_image.modulus();
  auto reduce = [&](const Rational& c) {
    auto r = reduce_rational(c, p);
    if (!r) throw std::domain_error("coefficient " + c.to_string() + " has a denominator divisible by " + std::to_string(p));
    return *r;
  };
  if (!a.field()->modulus().evaluate_mapped(generator_image, reduce).is_zero()) {
    throw std::domain_error("generator image " + generator_image.to_string() + " is not a root of the modulus mod " +
                            std::to_string(p));
  }
  return a.as_polynomial().evaluate_mapped(generator_image, reduce);
}

}  // namespace polarmm
