// One line per acceptance criterion; the exit status is the number of failures.
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "golden_lattes.hpp"
#include "polarmm/dynamics.hpp"
#include "polarmm/endomorphism.hpp"
#include "polarmm/finite_reduction.hpp"
#include "polarmm/lattes.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/sampling.hpp"
#include "support.hpp"

using namespace polarmm;
using NFE = NumberFieldElement;
using G = GaussianInteger;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> check;
};

NFE qi(const std::string& s) { return parse_element(gaussian_field(), s); }
NFE q5(const std::string& s) { return parse_element(cyclotomic5_field(), s); }

Polynomial<NFE> poly(const std::vector<std::string>& c) {
  std::vector<NFE> out;
  for (const auto& s : c) out.push_back(qi(s));
  return Polynomial<NFE>(out);
}

// Integer arithmetic in ℤ[ζ₅] = ℤ[x]/(x⁴+x³+x²+x+1), coefficients ascending.
std::vector<long> cyclotomic_product(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> full(9, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) full[i + j] += a[i] * b[j];
  }
  for (std::size_t k = 8; k >= 5; --k) full[k - 5] += full[k], full[k] = 0;  // ζ⁵ = 1
  for (std::size_t k = 0; k < 4; ++k) full[k] -= full[4];                      // ζ⁴ = −1−ζ−ζ²−ζ³
  return {full[0], full[1], full[2], full[3]};
}

bool c1(std::string& note) {
  // z = 4+3ζ+12ζ², z̄ = 4+3ζ⁴+12ζ³ = 1−3ζ−3ζ²+9ζ³
  const auto norm = cyclotomic_product({4, 3, 12, 0}, {1, -3, -3, 9});
  const bool oracle = norm == std::vector<long>{121, 0, 0, 0};
  const NFE z = q5("4+3*w+12*w^2");
  const auto n = is_rational_integer(z * z.conjugate());
  const bool lib = n && *n == 121 && !is_root_of_unity(z / z.conjugate());
  note = "z*conj(z) = " + (n ? n->get_str() : std::string("?"));
  return oracle && lib;
}

bool c2(std::string& note) {
  const auto a = cm_polarization_check(q5("1+w"));
  const auto b = cm_polarization_check(qi("2+w"));
  const auto c = cm_polarization_check(q5("4+3*w+12*w^2"));
  note = "[1+zeta5] " + std::string(a.polarized ? "polarized" : "not polarized") + ", [2+i] weight " +
         (b.weight ? b.weight->get_str() : "-") + ", [z] weight " + (c.weight ? c.weight->get_str() : "-");
  return !a.polarized && b.polarized && b.weight == 5 && c.polarized && c.weight == 121;
}

bool c3(std::string& note) {
  unsigned agree = 0, total = 0;
  for (const G& m : testing::gaussians_up_to(25)) {
    const Endomorphism<NFE> f(gaussian_cm_curve(), m);
    agree += two_torsion_criterion(f).polarized == divisor_sum_oracle(f).principal;
    ++total;
  }
  const auto one_i = two_torsion_criterion(Endomorphism<NFE>(gaussian_cm_curve(), G(1, 1)));
  const auto two_i = two_torsion_criterion(Endomorphism<NFE>(gaussian_cm_curve(), G(2, 1)));
  note = std::to_string(agree) + "/" + std::to_string(total) + " agree";
  return agree == total && total == 80 && !one_i.polarized && one_i.kernel_two_torsion == 2u && two_i.polarized &&
         two_i.kernel_two_torsion == 1u && two_i.weight == 5;
}

bool c4(std::string& note) {
  const auto phi = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), G(2, 1))).map;
  const auto psi = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), G(2, -1))).map;
  const bool ok = phi.numerator() == poly(golden::phi_numerator) && phi.denominator() == poly(golden::phi_denominator) &&
                  psi.numerator() == poly(golden::psi_numerator) && psi.denominator() == poly(golden::psi_denominator);
  note = "phi = " + phi.to_string();
  return ok;
}

bool c5(std::string& note) {
  const auto phi = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), G(2, 1)));
  const auto psi = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), G(2, -1)));
  const auto sp = verify_semiconjugacy(phi, 50), ss = verify_semiconjugacy(psi, 50, kDefaultSeed + 1);
  const auto delta = product_pullback_check(phi.map, psi.map);
  note = std::to_string(sp.checked - sp.failures) + "+" + std::to_string(ss.checked - ss.failures) +
         " points agree, delta weight " + (delta.weight ? delta.weight->get_str() : "-");
  return sp.passed() && sp.checked == 50 && ss.passed() && ss.checked == 50 && phi.degree() == 5 && psi.degree() == 5 &&
         delta.polarized && delta.weight == 5;
}

bool c6(std::string& note) {
  const CounterexampleReport rep = verify_counterexample();
  CounterexampleOptions neg;
  neg.stage4_multiplier = G(1, 1);
  const CounterexampleReport bad = verify_counterexample(neg);
  const bool neg_ok = bad.stages.size() == 4 && !bad.stages[3].pass &&
                      bad.stages[3].details.find("order 4") != std::string::npos;
  note = rep.verdict() + "; control 1+i: " + bad.verdict();
  return rep.verified() && neg_ok;
}

bool c7(std::string& note) {
  auto m = [](std::vector<std::vector<long>> rows) {
    std::vector<std::vector<G>> out;
    for (auto& r : rows) {
      out.emplace_back();
      for (long v : r) out.back().emplace_back(v);
    }
    return IntegerMatrix(out);
  };
  const IntegerMatrix a = m({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}});
  const IntegerMatrix b = m({{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}});
  const auto ca = matrix_polarization_check(a), cb = matrix_polarization_check(b);
  const auto n = matrix_power_coincidence(a, b, 24);
  note = "weights " + (ca.weight ? ca.weight->get_str() : "-") + ", " + (cb.weight ? cb.weight->get_str() : "-") +
         "; first coincidence n = " + (n ? std::to_string(*n) : "none");
  return ca.weight == 2 && cb.weight == 2 && n == 2u;
}

bool c8(std::string& note) {
  bool ok = true;
  for (std::uint64_t p : {5ULL, 13ULL}) {
    const FrobeniusData d = identify_frobenius(reduce_curve(gaussian_cm_curve(), p));
    const FrobeniusCheck c = verify_frobenius_verschiebung(d);
    const bool count = d.point_count == testing::count_points_euler(1, 0, p);
    ok = ok && d.alpha.norm() == static_cast<long>(p) && c.passed() && count &&
         c.frobenius_certificate.weight == static_cast<long>(p) && c.verschiebung_certificate.weight == static_cast<long>(p);
    note += "p=" + std::to_string(p) + " alpha=" + d.alpha.to_string() + " #E=" + std::to_string(d.point_count) + " ";
  }
  return ok;
}

bool c9(std::string& note) {
  const RationalFunction<NFE> phi = reference_phi();
  Rng rng(kDefaultSeed);
  bool ok = true;
  double lo = 1e9, hi = 0;
  unsigned found = 0;
  while (found < 10) {
    const NFE x = random_element(gaussian_field(), rng, 6, 3);
    if (naive_height(x) < std::log(2.0)) continue;
    const HeightProbe probe = height_growth_probe(phi, ProjectivePoint<NFE>::affine(x), 3);
    if (probe.ratios.size() < 3) continue;
    ++found;
    const double r = probe.ratios[2];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    ok = ok && r >= 3.5 && r <= 6.5;
  }
  note = "step-3 ratios in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  return ok;
}

bool c10(std::string& note) {
  bool ok = true;
  mpz_class expected = 1;
  for (unsigned g = 1; g <= 3; ++g) {
    expected *= 5;
    const WeightDivision w = weight_division(5, 25, g);
    ok = ok && w.weight == 5 && w.degree == expected;
  }
  bool refused = false;
  try {
    weight_division(2, 5, 1);
  } catch (const std::domain_error&) {
    refused = true;
  }
  note = refused ? "(5, 25, g) -> (5, 5^g); (2, 5, 1) refused" : "(2, 5, 1) was accepted";
  return ok && refused;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Z[zeta5] norm of 4+3zeta5+12zeta5^2 is 121, ratio not a root of unity", c1},
      {2, "Rosati criterion outcomes for 1+zeta5, 2+i and z", c2},
      {3, "two-torsion criterion matches the divisor-sum oracle for all norms <= 25", c3},
      {4, "Lattes maps of 2+i and 2-i match the golden coefficient lists", c4},
      {5, "semiconjugacy at 50 seeded points, degree 5, delta weight 5", c5},
      {6, "counterexample verified; multiplier 1+i fails stage 4 with order 4", c6},
      {7, "matrix example: weight 2 and alpha^2 = beta^2", c7},
      {8, "Frobenius and Verschiebung at p = 5 and p = 13", c8},
      {9, "log-height ratios under phi at step 3 lie in [3.5, 6.5]", c9},
      {10, "weight division (5, 25, g) and the refusal of (2, 5, 1)", c10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " -- " << note << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass\n";
  return failures;
}
