#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden_lattes.hpp"
#include "polarmm/finite_reduction.hpp"
#include "polarmm/lattes.hpp"
#include "polarmm/sampling.hpp"
#include "support.hpp"

using namespace polarmm;
using NFE = NumberFieldElement;
using G = GaussianInteger;
using testing::GaussPoly;
using testing::GaussRational;

namespace {

NFE qi(const std::string& s) { return parse_element(gaussian_field(), s); }

Polynomial<NFE> poly(const std::vector<std::string>& c) {
  std::vector<NFE> out;
  for (const auto& s : c) out.push_back(qi(s));
  return Polynomial<NFE>(out);
}

LattesMap<NFE> lattes_of(const G& m) { return build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), m)); }

GaussPoly gauss_poly(const Polynomial<NFE>& p) {
  GaussPoly out;
  for (const auto& c : p.coefficients()) out.push_back(testing::as_gauss(c));
  return out;
}

// u·x·(x² + c)², expanded without the library.
GaussPoly factored_numerator(GaussRational u, GaussRational c) {
  const GaussRational zero{0, 0}, one{1, 0};
  const GaussPoly sq = testing::multiply({c, zero, one}, {c, zero, one});
  return testing::multiply({zero, u}, sq);
}

// (5x² + e)²
GaussPoly factored_denominator(GaussRational e) {
  const GaussRational zero{0, 0}, five{5, 0};
  return testing::multiply({e, zero, five}, {e, zero, five});
}

// Cross-multiplied equality n1·d2 = n2·d1 of two fractions.
bool same_fraction(const GaussPoly& n1, const GaussPoly& d1, const GaussPoly& n2, const GaussPoly& d2) {
  return testing::multiply(n1, d2) == testing::multiply(n2, d1);
}

}  // namespace

TEST_CASE("golden: Lattes maps of 2+i and 2-i in canonical form") {
  const LattesMap<NFE> phi = lattes_of(G(2, 1)), psi = lattes_of(G(2, -1));
  CHECK(phi.map.numerator() == poly(golden::phi_numerator));
  CHECK(phi.map.denominator() == poly(golden::phi_denominator));
  CHECK(psi.map.numerator() == poly(golden::psi_numerator));
  CHECK(psi.map.denominator() == poly(golden::psi_denominator));
  CHECK(phi.map == reference_phi());
  CHECK(psi.map == reference_psi());
  const auto [num, den] = integral_presentation(phi.map);
  CHECK(coefficient_literals(num) == golden::phi_numerator_integral);
  CHECK(coefficient_literals(den) == golden::phi_denominator_integral);
}

TEST_CASE("golden lists agree with the factored formulas") {
  const GaussPoly phi_n = factored_numerator({3, -4}, {1, -2}), phi_d = factored_denominator({1, 2});
  const GaussPoly psi_n = factored_numerator({3, 4}, {1, 2}), psi_d = factored_denominator({1, -2});
  CHECK(same_fraction(phi_n, phi_d, gauss_poly(poly(golden::phi_numerator)), gauss_poly(poly(golden::phi_denominator))));
  CHECK(same_fraction(psi_n, psi_d, gauss_poly(poly(golden::psi_numerator)), gauss_poly(poly(golden::psi_denominator))));
  CHECK(same_fraction(phi_n, phi_d, gauss_poly(lattes_of(G(2, 1)).map.numerator()),
                      gauss_poly(lattes_of(G(2, 1)).map.denominator())));
  CHECK_FALSE(same_fraction(phi_n, phi_d, psi_n, psi_d));
}

TEST_CASE("Lattes maps of [2], [-1], [i] and [1+i]") {
  CHECK(lattes_of(G(2)).map == RationalFunction<NFE>(poly({"1", "0", "-2", "0", "1"}), poly({"0", "4", "0", "4"})));
  CHECK(lattes_of(G(-1)).map == RationalFunction<NFE>::identity(qi("0")));
  CHECK(lattes_of(G(0, 1)).map == RationalFunction<NFE>(poly({"0", "-1"}), poly({"1"})));
  CHECK(lattes_of(G(1, 1)).map == RationalFunction<NFE>(poly({"-1/2*w", "0", "-1/2*w"}), poly({"0", "1"})));
}

TEST_CASE("property: degree equals norm and conjugation acts coefficientwise") {
  for (const G& m : testing::gaussians_up_to(10)) {
    CAPTURE(m.to_string());
    const LattesMap<NFE> f = lattes_of(m);
    CHECK(mpz_class(f.degree()) == m.norm());
    const auto conj = f.map.map_coefficients(qi("0"), [](const NFE& c) { return c.conjugate(); });
    CHECK(lattes_of(m.conjugate()).map == conj);
  }
}

TEST_CASE("property: functoriality build(ab) = build(a) o build(b)") {
  Rng rng(41);
  unsigned tried = 0;
  while (tried < 6) {
    const G a = testing::random_gaussian(rng, 10), b = testing::random_gaussian(rng, 10);
    if ((a * b).norm() > 40) continue;
    ++tried;
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(lattes_of(a * b).map == lattes_of(a).map.compose(lattes_of(b).map));
  }
}

TEST_CASE("semiconjugacy at 50 seeded points for every map of norm <= 10") {
  for (const G& m : testing::gaussians_up_to(10)) {
    CAPTURE(m.to_string());
    const SemiconjugacyReport r = verify_semiconjugacy(lattes_of(m), 50);
    CHECK(r.checked == 50);
    CHECK(r.failures == 0);
    CHECK(r.passed());
  }
}

TEST_CASE("semiconjugacy detects a corrupted map") {
  LattesMap<NFE> bad = lattes_of(G(2, 1));
  bad.map = bad.map + RationalFunction<NFE>::constant(qi("1/7"));
  const SemiconjugacyReport r = verify_semiconjugacy(bad, 20);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.first_failure.empty());
}

TEST_CASE("semiconjugacy over finite fields, exhaustively in x") {
  for (std::uint64_t p : {13ULL, 17ULL}) {
    const ReducedCurve red = reduce_curve(gaussian_cm_curve(), p);
    for (const G& m : testing::gaussians_up_to(5)) {
      const LattesMap<PrimeFieldElement> f = build_lattes(Endomorphism<PrimeFieldElement>(red.curve, m));
      std::uint64_t next = 0;
      const SemiconjugacyReport r =
          verify_semiconjugacy(f, static_cast<unsigned>(p), [&] { return PrimeFieldElement(static_cast<std::int64_t>(next++), p); });
      CHECK(r.passed());
      CHECK(r.quadratic_points > 0);
    }
  }
}

TEST_CASE("reducing the map commutes with building it over the reduction") {
  for (std::uint64_t p : {13ULL, 29ULL}) {
    for (unsigned choice = 0; choice < 2; ++choice) {
      const ReducedCurve red = reduce_curve(gaussian_cm_curve(), p, choice);
      for (const G& m : testing::gaussians_up_to(10)) {
        const auto over_fp = build_lattes(Endomorphism<PrimeFieldElement>(red.curve, m)).map;
        CHECK(reduce_map(lattes_of(m).map, red.iota) == over_fp);
      }
    }
  }
}

TEST_CASE("pullback degrees on P1 and P1 x P1") {
  const auto phi = reference_phi(), psi = reference_psi();
  CHECK(pullback_degree(phi) == 5);
  const auto delta = product_pullback_check(phi, psi);
  CHECK(delta.polarized);
  CHECK(delta.weight == 5);
  CHECK(delta.reason == PolarizationReason::PullbackDegree);

  const auto mixed = product_pullback_check(lattes_of(G(1, 1)).map, lattes_of(G(1, 2)).map);
  CHECK_FALSE(mixed.polarized);
  CHECK(mixed.diagnostics.find("unequal degrees") != std::string::npos);

  const auto units = product_pullback_check(lattes_of(G(0, 1)).map, lattes_of(G(1)).map);
  CHECK(units.polarized);
  CHECK_FALSE(units.is_polarization());
}

TEST_CASE("kernel x-coordinates of phi are the roots of its denominator") {
  const auto xs = kernel_x_coordinates(reference_phi());
  REQUIRE(xs.size() == 2);
  for (const auto& x : xs) {
    const auto target = lift(qi("-1/5-2/5*w"), x);
    CHECK(x * x == target);
  }
  CHECK_FALSE(xs[0] == xs[1]);
}

TEST_CASE("the radical torsion value belongs to the kernel of [2-i]") {
  // ±x = A + Bi with A = √((√5 − 1)/10), B = (1/5)√(10/(√5 − 1)).
  // Exact: A² = (√5 − 1)/10 and B² = (√5 + 1)/10 in ℚ(√5), so A² − B² = −1/5
  // and A²B² = 1/25, AB = 1/5, giving x² = −1/5 + 2i/5 = −(1 − 2i)/5.
  const NumberFieldPtr q_sqrt5 = make_number_field({Rational(-5), Rational(0), Rational(1)}, std::nullopt, "Q(sqrt5)");
  const NFE s = nf_generator(q_sqrt5);
  const NFE a2 = (s - nf_constant(q_sqrt5, 1)) / nf_constant(q_sqrt5, 10);
  const NFE b2 = nf_constant(q_sqrt5, Rational::parse("1/25")) * nf_constant(q_sqrt5, 10) /
                 (s - nf_constant(q_sqrt5, 1));
  CHECK(a2 - b2 == nf_constant(q_sqrt5, Rational::parse("-1/5")));
  CHECK(a2 * b2 == nf_constant(q_sqrt5, Rational::parse("1/25")));

  // Floating point, evaluated on both denominators.
  using C = std::complex<long double>;
  const long double r5 = std::sqrt(5.0L);
  const C x(std::sqrt((r5 - 1) / 10), std::sqrt(10 / (r5 - 1)) / 5);
  const C phi_den = 5.0L * x * x + C(1, 2), psi_den = 5.0L * x * x + C(1, -2);
  CHECK(std::abs(psi_den) < 1e-15L);
  CHECK(std::abs(phi_den) > 1.0L);

  // Exact in ℚ(i): x² = −(1 − 2i)/5 kills ψ's denominator and not φ's.
  const NFE x2 = qi("-1/5+2/5*w");
  CHECK(qi("5") * x2 + qi("1-2*w") == qi("0"));
  CHECK_FALSE(qi("5") * x2 + qi("1+2*w") == qi("0"));
  for (const auto& k : kernel_x_coordinates(reference_psi())) CHECK(k * k == lift(x2, k));
}
