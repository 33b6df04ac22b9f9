#include "polarmm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "polarmm/endomorphism.hpp"
#include "polarmm/finite_reduction.hpp"
#include "polarmm/lattes.hpp"

namespace polarmm {

namespace {

using NFE = NumberFieldElement;
using Fp = PrimeFieldElement;

bool is_gaussian_field(const NFE& x) { return x.same_field(nf_constant(gaussian_field(), Rational())); }

double gaussian_height(const NFE& x) {
  const Polynomial<Rational> q = x.as_polynomial();
  mpz_class lcm = 1;
  for (std::size_t k = 0; k < 2; ++k) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.coeff(k).denominator().get_mpz_t());
  GaussianInteger num((q.coeff(0) * Rational(lcm)).numerator(), (q.coeff(1) * Rational(lcm)).numerator());
  GaussianInteger den(lcm, 0);
  const GaussianInteger g = GaussianInteger::gcd(num, den);
  num = GaussianInteger::exact_quotient(num, g);
  den = GaussianInteger::exact_quotient(den, g);
  return log_abs(std::max(num.norm(), den.norm()));
}

double coefficient_height(const NFE& x) {
  mpz_class top = 1;
  for (const auto& c : x.coefficients()) {
    top = std::max(top, mpz_class(abs(c.numerator())));
    top = std::max(top, c.denominator());
  }
  return log_abs(top);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

}  // namespace

double naive_height(const NumberFieldElement& x) {
  if (x.is_zero()) return 0.0;
  return is_gaussian_field(x) ? gaussian_height(x) : coefficient_height(x);
}

double naive_height(const ProjectivePoint<NumberFieldElement>& x) {
  return x.is_infinity() ? 0.0 : naive_height(x.value());
}

std::string to_string(OrbitOutcome outcome) {
  switch (outcome) {
    case OrbitOutcome::Preperiodic: return "preperiodic";
    case OrbitOutcome::HeightDiverging: return "height-diverging";
    case OrbitOutcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool HeightProbe::ratios_within(unsigned d, std::size_t from) const {
  if (!applicable || ratios.size() < from) return false;
  for (std::size_t k = from; k <= ratios.size(); ++k) {
    const double r = ratios[k - 1];
    if (r < d - 1.5 || r > d + 1.5) return false;
  }
  return true;
}

HeightProbe height_growth_probe(const RationalFunction<NumberFieldElement>& map,
                                const ProjectivePoint<NumberFieldElement>& x0, unsigned steps) {
  HeightProbe probe;
  probe.heights.push_back(naive_height(x0));
  if (x0.is_infinity() || probe.heights.front() == 0.0) {
    probe.applicable = false;
    probe.note = "start point has height 0";
    return probe;
  }
  std::set<std::string> seen{x0.to_string()};
  ProjectivePoint<NumberFieldElement> x = x0;
  for (unsigned k = 1; k <= steps; ++k) {
    x = map.evaluate(x);
    if (x.is_infinity()) {
      probe.note = "orbit reached infinity at step " + std::to_string(k);
      break;
    }
    if (!seen.insert(x.to_string()).second) {
      probe.note = "orbit repeated at step " + std::to_string(k) + ": preperiodic start";
      break;
    }
    const double h = naive_height(x);
    probe.ratios.push_back(probe.heights.back() > 0.0 ? h / probe.heights.back() : 0.0);
    probe.heights.push_back(h);
  }
  return probe;
}

bool TorsionSuiteReport::passed() const {
  return !orders.empty() && std::all_of(orders.begin(), orders.end(), [](const auto& r) { return r.passed(); });
}

TorsionSuiteReport torsion_preperiodicity_suite(const EllipticCurve<NumberFieldElement>& curve,
                                                const GaussianInteger& alpha, const std::vector<std::int64_t>& orders,
                                                std::uint64_t prime_bound) {
  const RationalFunction<NFE> phi = build_lattes(Endomorphism<NFE>(curve, alpha)).map;
  const RationalFunction<NFE> psi = build_lattes(Endomorphism<NFE>(curve, alpha.conjugate())).map;
  const mpz_class norm = alpha.norm();
  const std::uint64_t bound = std::min(prime_bound, kMaxReductionPrime);
  TorsionSuiteReport report;
  for (const std::int64_t n : orders) {
    if (n < 1) throw std::invalid_argument("torsion orders must be >= 1");
    const auto nn = static_cast<std::uint64_t>(n);
    std::optional<ReducedCurve> reduced;
    std::vector<CurvePoint<Fp>> torsion;
    for (std::uint64_t p = 5; p <= bound && !reduced; p += 4) {
      if (!is_prime(p) || nn % p == 0 || norm % static_cast<unsigned long>(p) == 0) continue;
      try {
        ReducedCurve r = reduce_curve(curve, p);
        auto pts = rational_torsion(r.curve, n);
        if (pts.size() == nn * nn) {
          reduced = std::move(r);
          torsion = std::move(pts);
        }
      } catch (const std::domain_error&) {
      }
    }
    if (!reduced) {
      throw std::domain_error("no split prime below " + std::to_string(bound) + " has E[" + std::to_string(n) +
                              "] rational");
    }
    const RationalFunction<Fp> phi_p = reduce_map(phi, reduced->iota);
    const RationalFunction<Fp> psi_p = reduce_map(psi, reduced->iota);

    std::vector<ProjectivePoint<Fp>> xs;
    for (const auto& t : torsion) {
      const auto x = t.is_infinity() ? ProjectivePoint<Fp>::infinity() : ProjectivePoint<Fp>::affine(t.x());
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
      if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
      return a.value() < b.value();
    });
    auto member = [&](const ProjectivePoint<Fp>& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };

    TorsionOrderReport r;
    r.order = n;
    r.prime = reduced->p;
    r.torsion_points = torsion.size();
    r.x_values = xs.size();
    r.all_preperiodic = true;
    r.stays_in_torsion = true;
    r.diagonal_preperiodic = true;
    OrbitOptions opts;
    opts.budget = static_cast<unsigned>(reduced->p + 2);
    for (const auto& x : xs) {
      const OrbitRecord<Fp> rec = orbit(x, phi_p, opts);
      r.all_preperiodic = r.all_preperiodic && rec.outcome == OrbitOutcome::Preperiodic;
      r.tail_cycle.emplace_back(rec.tail, rec.cycle);
      r.stays_in_torsion = r.stays_in_torsion && member(phi_p.evaluate(x)) && member(psi_p.evaluate(x));
      const auto diag = product_orbit(x, x, phi_p, psi_p, static_cast<unsigned>(xs.size() * xs.size() + 1));
      r.diagonal_preperiodic = r.diagonal_preperiodic && diag.has_value();
    }
    report.orders.push_back(std::move(r));
  }
  return report;
}

DiagonalEscapeReport diagonal_escape_check(const RationalFunction<NumberFieldElement>& phi,
                                           const RationalFunction<NumberFieldElement>& psi, unsigned n_max,
                                           const NumberFieldElement& alpha) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  DiagonalEscapeReport report;
  report.certificate = counterexample_pair_check(alpha);
  RationalFunction<NFE> a = phi, b = psi;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      a = phi.compose(a);
      b = psi.compose(b);
    }
    const bool distinct = !(a == b);
    report.distinct.push_back(distinct);
    if (!distinct) {
      report.first_equal = n;
      break;
    }
  }
  if (const auto k = report.certificate.ratio_unity_order) {
    // An order-k ratio forces φᵏ = ψᵏ; checked while the degree stays small.
    const double degree_k = std::pow(static_cast<double>(std::max(1, phi.degree())), static_cast<double>(*k));
    if (degree_k <= 1e4) {
      report.equal_at_unity_order = iterate(phi, static_cast<unsigned>(*k)) == iterate(psi, static_cast<unsigned>(*k));
      report.consistent = *report.equal_at_unity_order;
    }
  } else if (report.first_equal && report.certificate.valid) {
    report.consistent = false;
  }

  std::ostringstream v;
  if (report.first_equal && *report.first_equal == 1) {
    v << "diagonal invariant: phi = psi";
  } else if (report.first_equal) {
    v << "phi^" << *report.first_equal << " = psi^" << *report.first_equal << ": diagonal preperiodic";
  } else {
    v << "phi^n != psi^n for 1 <= n <= " << n_max;
  }
  v << "; certificate: " << (report.certificate.valid ? "valid" : "invalid") << " (" << report.certificate.diagnostics
    << ")";
  if (report.equal_at_unity_order && *report.equal_at_unity_order) {
    v << "; phi^" << *report.certificate.ratio_unity_order << " = psi^" << *report.certificate.ratio_unity_order;
  }
  if (!report.consistent) v << "; finite check and certificate disagree";
  report.verdict = v.str();
  return report;
}

bool CounterexampleReport::verified() const {
  return stages.size() == 4 && std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.pass; });
}

std::string CounterexampleReport::verdict() const {
  if (verified()) return "counterexample verified at desk scale";
  for (const auto& s : stages) {
    if (!s.pass) return "failed at stage " + s.name;
  }
  return "incomplete";
}

CounterexampleReport verify_counterexample(const CounterexampleOptions& options) {
  CounterexampleReport report;
  const EllipticCurve<NFE> curve = gaussian_cm_curve();
  const GaussianInteger alpha(2, 1);
  const RationalFunction<NFE> phi = build_lattes(Endomorphism<NFE>(curve, alpha)).map;
  const RationalFunction<NFE> psi = build_lattes(Endomorphism<NFE>(curve, alpha.conjugate())).map;

  {
    RationalFunction<NFE> ref_phi = reference_phi();
    if (options.corrupt_formula) {
      const NFE one = nf_constant(gaussian_field(), 1);
      ref_phi = RationalFunction<NFE>(ref_phi.numerator() + Polynomial<NFE>::monomial(one, 2), ref_phi.denominator());
    }
    const bool phi_ok = phi == ref_phi;
    const bool psi_ok = psi == reference_psi();
    std::string details = std::string("phi ") + (phi_ok ? "matches" : "differs from") + " the reference formula; psi " +
                          (psi_ok ? "matches" : "differs from") + " the reference formula";
    report.stages.push_back({"lattes-formulas", phi_ok && psi_ok, details});
  }
  {
    const PolarizationCertificate cert = product_pullback_check(phi, psi);
    const bool ok = cert.polarized && cert.weight && *cert.weight == 5;
    report.stages.push_back({"product-pullback", ok, cert.diagnostics});
  }
  {
    StageReport stage{"torsion-preperiodicity", false, ""};
    try {
      const TorsionSuiteReport suite = torsion_preperiodicity_suite(curve, alpha, options.torsion_orders);
      std::vector<std::string> parts;
      for (const auto& r : suite.orders) {
        parts.push_back("n=" + std::to_string(r.order) + " p=" + std::to_string(r.prime) + " |E[n]|=" +
                        std::to_string(r.torsion_points) + (r.passed() ? " ok" : " FAILED"));
      }
      stage.pass = suite.passed();
      stage.details = join(parts, ", ") + "; sampled torsion orders only, density itself is a theorem";
    } catch (const std::exception& e) {
      stage.details = e.what();
    }
    report.stages.push_back(stage);
  }
  {
    const GaussianInteger& m = options.stage4_multiplier;
    RationalFunction<NFE> phi4 = phi, psi4 = psi;
    if (!(m == alpha)) {
      phi4 = build_lattes(Endomorphism<NFE>(curve, m)).map;
      psi4 = build_lattes(Endomorphism<NFE>(curve, m.conjugate())).map;
    }
    const DiagonalEscapeReport diag = diagonal_escape_check(phi4, psi4, options.n_max, to_gaussian_element(m));
    report.stages.push_back({"diagonal-escape", diag.passed(), "multiplier " + m.to_string() + ": " + diag.verdict});
  }
  return report;
}

}  // namespace polarmm
