#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/sampling.hpp"
#include "support.hpp"

using namespace polarmm;
using NFE = NumberFieldElement;
using G = GaussianInteger;

namespace {

NFE qi(const std::string& s) { return parse_element(gaussian_field(), s); }
NFE q5(const std::string& s) { return parse_element(cyclotomic5_field(), s); }

IntegerMatrix from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<G>> out;
  for (const auto& r : rows) {
    std::vector<G> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return IntegerMatrix(out);
}

// [[a, −b̄], [b, ā]] satisfies Q†Q = (N(a) + N(b))·I.
IntegerMatrix quaternion_block(const G& a, const G& b) {
  return IntegerMatrix({{a, -b.conjugate()}, {b, a.conjugate()}});
}

// Random M with M†M = d·I: a quaternion block, optionally doubled into a 4×4
// block-diagonal matrix, then rows permuted and scaled by units.
IntegerMatrix random_polarized(Rng& rng) {
  const IntegerMatrix q = quaternion_block(testing::random_gaussian(rng, 9), testing::random_gaussian(rng, 9));
  std::vector<std::vector<G>> rows;
  if (rng.below(2) == 0) {
    rows = q.rows();
  } else {
    rows.assign(4, std::vector<G>(4, G(0)));
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        rows[r][c] = q.at(r, c);
        rows[r + 2][c + 2] = q.at(r, c);
      }
    }
  }
  for (std::size_t r = rows.size(); r > 1; --r) std::swap(rows[r - 1], rows[rng.below(r)]);
  const G units[] = {G(1), G(-1), G(0, 1), G(0, -1)};
  for (auto& row : rows) {
    const G u = units[rng.below(4)];
    for (auto& e : row) e = e * u;
  }
  return IntegerMatrix(rows);
}

}  // namespace

TEST_CASE("Rosati criterion on the cyclotomic and Gaussian examples") {
  const auto z = cm_polarization_check(q5("4+3*w+12*w^2"));
  CHECK(z.polarized);
  CHECK(z.weight == 121);
  CHECK(z.reason == PolarizationReason::NormIsInteger);

  const auto one_plus_zeta = cm_polarization_check(q5("1+w"));
  CHECK_FALSE(one_plus_zeta.polarized);
  CHECK_FALSE(one_plus_zeta.weight);
  CHECK(one_plus_zeta.reason == PolarizationReason::NormNotInteger);

  const auto two_plus_i = cm_polarization_check(qi("2+w"));
  CHECK(two_plus_i.polarized);
  CHECK(two_plus_i.weight == 5);
  CHECK(two_plus_i.is_polarization());

  const auto unit = cm_polarization_check(qi("w"));
  CHECK(unit.polarized);
  CHECK(unit.weight == 1);
  CHECK_FALSE(unit.is_polarization());

  CHECK_FALSE(cm_polarization_check(qi("1/2")).polarized);
  CHECK_THROWS_AS(cm_polarization_check(qi("0")), std::invalid_argument);
}

TEST_CASE("independent norm oracle for (1+zeta5)(1+zeta5^4)") {
  // ζ + ζ⁴ = (√5 − 1)/2, so (1+ζ)(1+ζ⁴) = 2 + ζ + ζ⁴ is irrational.
  const NFE a = q5("1+w");
  CHECK((a * a.conjugate()) == q5("2+w+w^4"));
  CHECK_FALSE(is_rational_integer(a * a.conjugate()));
}

TEST_CASE("property: alpha and its conjugate give the same certificate") {
  Rng rng(21);
  for (const auto& field : {gaussian_field(), cyclotomic5_field()}) {
    for (int k = 0; k < 60; ++k) {
      NFE a = random_element(field, rng, 9, k % 3 == 0 ? 1 : 2);
      if (a.is_zero()) continue;
      const auto c1 = cm_polarization_check(a), c2 = cm_polarization_check(a.conjugate());
      CHECK(c1.polarized == c2.polarized);
      CHECK(c1.weight == c2.weight);
    }
  }
}

TEST_CASE("counterexample pair conditions") {
  const auto good = counterexample_pair_check(qi("2+w"));
  CHECK(good.valid);
  CHECK(good.norm == 5);
  CHECK_FALSE(good.ratio_unity_order);

  const auto pair_1i = counterexample_pair_check(qi("1+w"));
  CHECK_FALSE(pair_1i.valid);
  CHECK(pair_1i.ratio_unity_order == 4u);
  CHECK(pair_1i.diagnostics.find("order 4") != std::string::npos);

  const auto integer = counterexample_pair_check(qi("3"));
  CHECK_FALSE(integer.valid);
  CHECK(integer.alpha_is_integer);

  CHECK(counterexample_pair_check(q5("4+3*w+12*w^2")).valid);
  CHECK_FALSE(counterexample_pair_check(q5("1+w")).valid);
  CHECK_THROWS_AS(counterexample_pair_check(qi("0")), std::invalid_argument);
}

TEST_CASE("property: valid pairs never have coinciding powers") {
  Rng rng(22);
  for (int k = 0; k < 80; ++k) {
    const G a = testing::random_gaussian(rng, 25);
    const auto rep = counterexample_pair_check(to_gaussian_element(a));
    const IntegerMatrix m({{a}}), mbar({{a.conjugate()}});
    const auto n = matrix_power_coincidence(m, mbar, 24);
    if (rep.valid) {
      CHECK_FALSE(n);
    } else if (rep.ratio_unity_order) {
      // the 1×1 powers coincide exactly at the order of α/ᾱ
      REQUIRE(n);
      CHECK(*n == *rep.ratio_unity_order);
    }
  }
}

TEST_CASE("matrix example: alpha and beta") {
  const IntegerMatrix alpha = from_ints({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}});
  const IntegerMatrix beta = from_ints({{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}});
  const auto ca = matrix_polarization_check(alpha), cb = matrix_polarization_check(beta);
  CHECK(ca.polarized);
  CHECK(ca.weight == 2);
  CHECK(cb.polarized);
  CHECK(cb.weight == 2);
  CHECK(ca.reason == PolarizationReason::MatrixGramDiagonal);
  CHECK(alpha.power(2) == from_ints({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  CHECK(matrix_power_coincidence(alpha, beta, 24) == 2u);
  CHECK_FALSE(alpha == beta);
}

TEST_CASE("matrices that are not polarized") {
  const auto shear = matrix_polarization_check(from_ints({{1, 1}, {0, 1}}));
  CHECK_FALSE(shear.polarized);
  CHECK(shear.reason == PolarizationReason::MatrixGramNotDiagonal);
  CHECK_FALSE(matrix_polarization_check(from_ints({{1, 0}, {0, 2}})).polarized);
  CHECK_FALSE(matrix_polarization_check(from_ints({{0, 0}, {0, 0}})).polarized);
  CHECK_THROWS_AS(from_ints({{1, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerMatrix({}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_power_coincidence(from_ints({{1}}), from_ints({{1, 0}, {0, 1}}), 3), std::invalid_argument);
  CHECK_THROWS_AS(matrix_power_coincidence(from_ints({{1}}), from_ints({{1}}), 0), std::invalid_argument);
}

TEST_CASE("property: Gram weights multiply under powers") {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    const IntegerMatrix m = random_polarized(rng);
    const auto c = matrix_polarization_check(m);
    REQUIRE(c.polarized);
    mpz_class d = *c.weight;
    mpz_class dn = d;
    for (unsigned n = 2; n <= 3; ++n) {
      dn *= d;
      const auto cn = matrix_polarization_check(m.power(n));
      CHECK(cn.polarized);
      CHECK(cn.weight == dn);
    }
  }
}

TEST_CASE("weight division") {
  for (unsigned g = 1; g <= 3; ++g) {
    const WeightDivision w = weight_division(5, 25, g);
    CHECK(w.weight == 5);
    mpz_class expected = 1;
    for (unsigned k = 0; k < g; ++k) expected *= 5;
    CHECK(w.degree == expected);
  }
  CHECK_THROWS_AS(weight_division(2, 5, 1), std::domain_error);
  CHECK_THROWS_AS(weight_division(0, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(weight_division(5, 25, 0), std::invalid_argument);
}

TEST_CASE("property: weight_division(d, d*m, g) = (m, m^g)") {
  Rng rng(24);
  for (int k = 0; k < 100; ++k) {
    const mpz_class d = static_cast<unsigned long>(rng.between(1, 50));
    const mpz_class m = static_cast<unsigned long>(rng.between(1, 50));
    const auto g = static_cast<unsigned>(rng.between(1, 4));
    const WeightDivision w = weight_division(d, d * m, g);
    CHECK(w.weight == m);
    mpz_class mg = 1;
    for (unsigned j = 0; j < g; ++j) mg *= m;
    CHECK(w.degree == mg);
  }
}

TEST_CASE("reason tags have stable names") {
  CHECK(to_string(PolarizationReason::NormIsInteger) == "norm-is-integer");
  CHECK(to_string(PolarizationReason::KernelTwoTorsion) == "kernel-two-torsion");
  CHECK(to_string(PolarizationReason::PullbackDegree) == "pullback-degree");
}
