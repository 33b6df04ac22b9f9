#include "polarmm/finite_reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polarmm/extension_field.hpp"

namespace polarmm {

namespace {

using Fp = PrimeFieldElement;
using Fp2 = ExtElement<PrimeFieldElement>;

constexpr std::size_t kQuadraticSamples = 64;

bool is_gaussian(const NumberFieldElement& a) { return a.same_field(nf_constant(gaussian_field(), Rational())); }

GaussianInteger frobenius_associate(const GaussianInteger& pi, int unit) {
  static const GaussianInteger units[4] = {GaussianInteger(1), GaussianInteger(0, 1), GaussianInteger(-1),
                                           GaussianInteger(0, -1)};
  return units[unit] * pi;
}

// Points of E(𝔽_{p²}) \ E(𝔽_p), deterministic order, at most kQuadraticSamples.
std::vector<CurvePoint<Fp2>> quadratic_sample(const EllipticCurve<Fp2>& curve, std::uint64_t p) {
  const Fp2 like = curve.zero_element();
  const Fp2 t = Fp2::generator(like.field());
  std::vector<CurvePoint<Fp2>> out;
  for (std::uint64_t v = 1; v < p && out.size() < kQuadraticSamples; ++v) {
    for (std::uint64_t u = 0; u < p && out.size() < kQuadraticSamples; ++u) {
      const Fp2 x = like.integer_like(static_cast<std::int64_t>(u)) + like.integer_like(static_cast<std::int64_t>(v)) * t;
      const Fp2 c = curve.rhs(x);
      if (auto y = field_sqrt(c)) out.push_back(CurvePoint<Fp2>::affine(x, *y));
    }
  }
  return out;
}

struct FrobeniusWitness {
  std::vector<CurvePoint<Fp>> points;
  EllipticCurve<Fp2> curve2;
  std::vector<CurvePoint<Fp2>> sample;
};

FrobeniusWitness make_witness(const ReducedCurve& reduced) {
  const std::uint64_t p = reduced.p;
  std::uint64_t n = 2;
  while (Fp(static_cast<std::int64_t>(n), p).legendre() != -1) ++n;
  const Fp zero(0, p);
  auto field = std::make_shared<const ExtensionField<Fp>>(
      Polynomial<Fp>(std::vector<Fp>{-Fp(static_cast<std::int64_t>(n), p), zero, zero.one_like()}, zero), std::nullopt,
      "Fp2", "t");
  const Fp2 like = Fp2::constant(field, zero);
  EllipticCurve<Fp2> curve2 = base_change<Fp, Fp2>(reduced.curve, [&](const Fp& k) { return lift(k, like); });
  auto sample = quadratic_sample(curve2, p);
  return {enumerate_points(reduced.curve), std::move(curve2), std::move(sample)};
}

bool acts_as_frobenius(const ReducedCurve& reduced, const FrobeniusWitness& w, const GaussianInteger& alpha) {
  const Endomorphism<Fp> f(reduced.curve, alpha);
  for (const auto& pt : w.points) {
    if (!(f(pt) == pt)) return false;
  }
  const Fp2 like = w.curve2.zero_element();
  const Endomorphism<Fp2> f2 = f.base_change<Fp2>([&](const Fp& k) { return lift(k, like); });
  for (const auto& pt : w.sample) {
    const auto frob = CurvePoint<Fp2>::affine(power(pt.x(), reduced.p), power(pt.y(), reduced.p));
    if (!(f2(pt) == frob)) return false;
  }
  return true;
}

}  // namespace

std::vector<PrimeFieldElement> square_roots_of_minus_one(std::uint64_t p) {
  const auto r = field_sqrt(Fp(-1, p));
  if (!r) throw std::domain_error("-1 is not a square mod " + std::to_string(p));
  std::vector<Fp> out{*r, -*r};
  std::sort(out.begin(), out.end());
  return out;
}

ReducedCurve reduce_curve(const EllipticCurve<NumberFieldElement>& curve, std::uint64_t p, unsigned iota_choice) {
  if (!is_gaussian(curve.a())) throw std::invalid_argument("reduction is implemented for curves over Qi");
  if (p == 2) throw std::domain_error("p = 2 is ramified in Z[i]; ramified places are excluded");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > kMaxReductionPrime) {
    throw std::out_of_range("p = " + std::to_string(p) + " exceeds the point-counting cap " +
                            std::to_string(kMaxReductionPrime));
  }
  if (p % 4 == 3) throw std::domain_error("p = " + std::to_string(p) + " is inert in Z[i]: supersingular case out of scope");
  if (iota_choice > 1) throw std::invalid_argument("iota_choice must be 0 or 1");
  const Fp iota = square_roots_of_minus_one(p)[iota_choice];
  auto reduce = [&](const NumberFieldElement& c) {
    try {
      return reduce_element(c, iota);
    } catch (const std::domain_error&) {
      throw std::domain_error("bad reduction at p = " + std::to_string(p) + ": coefficient " + c.to_string() +
                              " is not p-integral");
    }
  };
  const Fp a = reduce(curve.a());
  const Fp b = reduce(curve.b());
  if ((Fp(4, p) * a * a * a + Fp(27, p) * b * b).is_zero()) {
    throw std::domain_error("bad reduction at p = " + std::to_string(p) + ": discriminant vanishes");
  }
  std::optional<Fp> unit;
  if (curve.cm_unit()) unit = reduce(*curve.cm_unit());
  return {p, iota, EllipticCurve<Fp>(a, b, unit)};
}

FrobeniusData identify_frobenius(const ReducedCurve& reduced) {
  const std::uint64_t p = reduced.p;
  if (!reduced.curve.has_cm()) throw std::domain_error("Frobenius identification needs the CM action");
  std::optional<GaussianInteger> pi;
  for (std::uint64_t a = 0; a * a <= p && !pi; ++a) {
    const std::uint64_t rest = p - a * a;
    std::uint64_t b = 0;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) pi = GaussianInteger(static_cast<long>(a), static_cast<long>(b));
  }
  if (!pi) throw std::domain_error(std::to_string(p) + " is not a sum of two squares");

  const FrobeniusWitness w = make_witness(reduced);
  std::vector<GaussianInteger> matches;
  for (const GaussianInteger& base : {*pi, pi->conjugate()}) {
    for (int u = 0; u < 4; ++u) {
      const GaussianInteger cand = frobenius_associate(base, u);
      if (std::find(matches.begin(), matches.end(), cand) != matches.end()) continue;
      if (acts_as_frobenius(reduced, w, cand)) matches.push_back(cand);
    }
  }
  if (matches.size() != 1) {
    throw std::runtime_error(std::to_string(matches.size()) + " multipliers of norm " + std::to_string(p) +
                             " act as the Frobenius; expected exactly one");
  }
  FrobeniusData data{reduced, matches.front(), w.points.size(), 2 * matches.front().re64()};
  return data;
}

bool FrobeniusCheck::passed() const {
  return frobenius_action && composition_is_norm && hasse && point_count && frobenius_certificate.polarized &&
         verschiebung_certificate.polarized && frobenius_certificate.weight == verschiebung_certificate.weight;
}

FrobeniusCheck verify_frobenius_verschiebung(const FrobeniusData& data) {
  const ReducedCurve& reduced = data.reduced;
  const std::uint64_t p = reduced.p;
  FrobeniusCheck check;
  const FrobeniusWitness w = make_witness(reduced);
  check.frobenius_action = acts_as_frobenius(reduced, w, data.alpha);

  const Endomorphism<Fp> frob(reduced.curve, data.alpha);
  const Endomorphism<Fp> ver = frob.conjugate();
  check.composition_is_norm = true;
  for (const auto& pt : w.points) {
    if (!(frob(ver(pt)) == reduced.curve.multiply(pt, static_cast<std::int64_t>(p)))) {
      check.composition_is_norm = false;
      break;
    }
  }
  const auto tr = static_cast<long double>(data.trace);
  check.hasse = tr * tr <= 4.0L * static_cast<long double>(p);
  check.point_count = data.point_count == w.points.size() &&
                      static_cast<std::int64_t>(w.points.size()) == static_cast<std::int64_t>(p) + 1 - data.trace &&
                      data.trace == 2 * data.alpha.re64();

  const mpz_class norm(static_cast<unsigned long>(p));
  check.frobenius_certificate = cm_polarization_check(to_gaussian_element(data.alpha));
  check.verschiebung_certificate = cm_polarization_check(to_gaussian_element(data.alpha.conjugate()));
  for (auto* cert : {&check.frobenius_certificate, &check.verschiebung_certificate}) {
    if (cert->polarized && cert->weight != norm) {
      cert->diagnostics += "; weight differs from p = " + norm.get_str();
      cert->polarized = false;
    }
  }
  return check;
}

S3Report s3_membership(const GaussianInteger& alpha) {
  const NumberFieldElement a = to_gaussian_element(alpha);
  S3Report out;
  out.ratio_order = is_root_of_unity(a / a.conjugate());
  out.member = !out.ratio_order.has_value();
  return out;
}

RationalFunction<PrimeFieldElement> reduce_map(const RationalFunction<NumberFieldElement>& map, const PrimeFieldElement& iota) {
  const std::uint64_t p = iota.modulus();
  if (!(iota * iota == -iota.one_like())) throw std::invalid_argument("iota must square to -1 mod p");
  const auto& num = map.numerator().coefficients();
  const auto& den = map.denominator().coefficients();
  mpz_class lcm = 1;
  for (const auto* coeffs : {&num, &den}) {
    for (const auto& c : *coeffs) {
      if (!is_gaussian(c)) throw std::invalid_argument("reduce_map expects coefficients in Qi");
      for (std::size_t k = 0; k < 2; ++k) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.as_polynomial().coeff(k).denominator().get_mpz_t());
      }
    }
  }
  auto integral = [&](const std::vector<NumberFieldElement>& coeffs) {
    std::vector<GaussianInteger> out;
    for (const auto& c : coeffs) {
      const Polynomial<Rational> q = c.as_polynomial();
      out.emplace_back((q.coeff(0) * Rational(lcm)).numerator(), (q.coeff(1) * Rational(lcm)).numerator());
    }
    return out;
  };
  std::vector<GaussianInteger> n = integral(num), d = integral(den);
  const GaussianInteger prime =
      GaussianInteger::gcd(GaussianInteger(static_cast<long>(p)), GaussianInteger(static_cast<long>(iota.value()), -1));
  auto all_divisible = [&] {
    bool any = false;
    for (const auto* v : {&n, &d}) {
      for (const auto& c : *v) {
        if (!GaussianInteger::divides(prime, c)) return false;
        any = any || !c.is_zero();
      }
    }
    return any;
  };
  while (all_divisible()) {
    for (auto* v : {&n, &d}) {
      for (auto& c : *v) c = GaussianInteger::exact_quotient(c, prime);
    }
  }
  const Fp zero(0, p);
  auto to_fp = [&](const std::vector<GaussianInteger>& v) {
    std::vector<Fp> out;
    const mpz_class pp(static_cast<unsigned long>(p));
    for (const auto& c : v) {
      mpz_class re = c.re() % pp, im = c.im() % pp;
      if (re < 0) re += pp;
      if (im < 0) im += pp;
      out.push_back(Fp(static_cast<std::int64_t>(re.get_ui()), p) + Fp(static_cast<std::int64_t>(im.get_ui()), p) * iota);
    }
    return Polynomial<Fp>(std::move(out), zero);
  };
  Polynomial<Fp> np = to_fp(n), dp = to_fp(d);
  if (dp.is_zero()) throw std::domain_error("denominator vanishes identically mod p = " + std::to_string(p));
  return RationalFunction<Fp>(std::move(np), std::move(dp));
}

std::vector<CurvePoint<PrimeFieldElement>> rational_torsion(const EllipticCurve<PrimeFieldElement>& curve, std::int64_t n) {
  std::vector<CurvePoint<Fp>> out;
  for (const auto& pt : enumerate_points(curve)) {
    if (curve.multiply(pt, n).is_infinity()) out.push_back(pt);
  }
  return out;
}

}  // namespace polarmm
