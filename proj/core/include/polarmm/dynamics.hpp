#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polarmm/elliptic_curve.hpp"
#include "polarmm/gaussian_integer.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/prime_field.hpp"
#include "polarmm/rational_function.hpp"

namespace polarmm {

/// log max(N(p), N(q)) for x = p/q in lowest terms over ℤ[i]; 0 at ∞.
/// Fields other than ℚ(i) use the largest numerator or denominator among the
/// power-basis coefficients instead.
double naive_height(const ProjectivePoint<NumberFieldElement>& x);
double naive_height(const NumberFieldElement& x);
inline double naive_height(const ProjectivePoint<PrimeFieldElement>&) { return 0.0; }

enum class OrbitOutcome { Preperiodic, HeightDiverging, Inconclusive };
std::string to_string(OrbitOutcome outcome);

template <FieldElement K>
struct OrbitRecord {
  OrbitOutcome outcome = OrbitOutcome::Inconclusive;
  unsigned tail = 0;        // m
  unsigned cycle = 0;       // s
  unsigned iterations = 0;  // map applications performed
  double final_height = 0.0;
  std::vector<ProjectivePoint<K>> trace;  // orbit prefix
};

struct OrbitOptions {
  unsigned budget = 100;
  /// Defaults to 50·h(x0) + 50.
  std::optional<double> height_threshold;
  std::size_t trace_length = 16;
};

/// Iterates until an exact repetition (minimal m, then s), a height above
/// the threshold (characteristic 0 only) or the budget.
template <FieldElement K>
OrbitRecord<K> orbit(const ProjectivePoint<K>& x0, const RationalFunction<K>& map, const OrbitOptions& options = {}) {
  if (options.budget < 1) throw std::invalid_argument("orbit budget must be >= 1");
  const bool track_height = x0.is_infinity() || x0.value().characteristic() == 0;
  const double threshold = options.height_threshold.value_or(50.0 * naive_height(x0) + 50.0);
  OrbitRecord<K> rec;
  std::unordered_map<std::string, unsigned> seen;
  ProjectivePoint<K> x = x0;
  for (unsigned k = 0;; ++k) {
    if (rec.trace.size() < options.trace_length) rec.trace.push_back(x);
    const auto [it, inserted] = seen.emplace(x.to_string(), k);
    if (!inserted) {
      rec.outcome = OrbitOutcome::Preperiodic;
      rec.tail = it->second;
      rec.cycle = k - it->second;
      break;
    }
    if (track_height) {
      rec.final_height = naive_height(x);
      if (rec.final_height > threshold) {
        rec.outcome = OrbitOutcome::HeightDiverging;
        break;
      }
    }
    if (k == options.budget) break;
    x = map.evaluate(x);
    rec.iterations = k + 1;
  }
  return rec;
}

/// (m, s) of (x, y) under (φ, ψ); empty when the budget runs out.
template <FieldElement K>
std::optional<std::pair<unsigned, unsigned>> product_orbit(const ProjectivePoint<K>& x, const ProjectivePoint<K>& y,
                                                           const RationalFunction<K>& phi,
                                                           const RationalFunction<K>& psi, unsigned budget) {
  std::unordered_map<std::string, unsigned> seen;
  ProjectivePoint<K> a = x, b = y;
  for (unsigned k = 0; k <= budget; ++k) {
    const auto [it, inserted] = seen.emplace(a.to_string() + "|" + b.to_string(), k);
    if (!inserted) return std::make_pair(it->second, k - it->second);
    a = phi.evaluate(a);
    b = psi.evaluate(b);
  }
  return std::nullopt;
}

struct HeightProbe {
  std::vector<double> heights;
  std::vector<double> ratios;  // ratios[k-1] = h_k / h_{k-1}
  bool applicable = true;
  std::string note;

  /// Ratios from step `from` on lie within [d - 1.5, d + 1.5].
  bool ratios_within(unsigned d, std::size_t from = 2) const;
};

/// Naive heights along the first `steps` iterates of x0.
HeightProbe height_growth_probe(const RationalFunction<NumberFieldElement>& map,
                                const ProjectivePoint<NumberFieldElement>& x0, unsigned steps);

struct TorsionOrderReport {
  std::int64_t order = 0;
  std::uint64_t prime = 0;
  std::size_t torsion_points = 0;  // #E[n] over 𝔽_p
  std::size_t x_values = 0;        // including ∞
  bool all_preperiodic = false;
  bool stays_in_torsion = false;   // orbits remain inside x(E[n]) ∪ {∞}
  bool diagonal_preperiodic = false;  // (t, t) under (φ, ψ)
  std::vector<std::pair<unsigned, unsigned>> tail_cycle;  // per x-value, sorted by value
  bool passed() const { return all_preperiodic && stays_in_torsion && diagonal_preperiodic; }
};

struct TorsionSuiteReport {
  std::vector<TorsionOrderReport> orders;
  bool passed() const;
};

/// For each n, reduces at the least split prime p ∤ 2·n·N(α) with E[n] ⊂ E(𝔽_p)
/// and checks that x(E[n]) ∪ {∞} is preperiodic under the reduced Lattès maps
/// of α and ᾱ, diagonal included.
TorsionSuiteReport torsion_preperiodicity_suite(const EllipticCurve<NumberFieldElement>& curve,
                                                const GaussianInteger& alpha, const std::vector<std::int64_t>& orders,
                                                std::uint64_t prime_bound = 10000);

struct DiagonalEscapeReport {
  std::vector<bool> distinct;             // distinct[n-1]: φⁿ ≠ ψⁿ
  std::optional<unsigned> first_equal;    // least n <= n_max with φⁿ = ψⁿ
  CounterexamplePairReport certificate;   // for the multiplier
  bool consistent = true;                 // a root-of-unity order k forces φᵏ = ψᵏ
  std::optional<bool> equal_at_unity_order;  // φᵏ = ψᵏ for that k, when computed
  std::string verdict;

  bool passed() const { return !first_equal && certificate.valid && consistent; }
};

/// φⁿ ≠ ψⁿ for n <= n_max plus the all-n certificate for α.
DiagonalEscapeReport diagonal_escape_check(const RationalFunction<NumberFieldElement>& phi,
                                           const RationalFunction<NumberFieldElement>& psi, unsigned n_max,
                                           const NumberFieldElement& alpha);

struct StageReport {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CounterexampleReport {
  std::vector<StageReport> stages;
  bool verified() const;
  std::string verdict() const;
};

struct CounterexampleOptions {
  bool corrupt_formula = false;  // perturbs the reference φ before stage 1
  GaussianInteger stage4_multiplier{2, 1};
  std::vector<std::int64_t> torsion_orders{2, 3, 4, 5};
  unsigned n_max = 3;
};

/// Four stages on y² = x³ + x with α = 2+i: reference formulas, δ*D ∼ 5D,
/// diagonal torsion preperiodicity over reductions, diagonal escape.
CounterexampleReport verify_counterexample(const CounterexampleOptions& options = {});

}  // namespace polarmm
