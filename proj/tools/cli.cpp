#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "polarmm/dynamics.hpp"
#include "polarmm/endomorphism.hpp"
#include "polarmm/finite_reduction.hpp"
#include "polarmm/lattes.hpp"
#include "polarmm/number_field.hpp"
#include "polarmm/polarizability.hpp"
#include "polarmm/sampling.hpp"

namespace polarmm::cli {

namespace {

using json = nlohmann::json;
using NFE = NumberFieldElement;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::string verdict = "info";
};

struct Settings {
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned budget = 100;
};

// ---------------------------------------------------------------- encoding

json integer(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

double rounded(double v) { return std::round(v * 1e9) / 1e9; }

json certificate_json(const PolarizationCertificate& c) {
  json j{{"polarized", c.polarized},
         {"reason", to_string(c.reason)},
         {"diagnostics", c.diagnostics},
         {"is_polarization", c.is_polarization()},
         {"weight", c.weight ? integer(*c.weight) : json(nullptr)}};
  if (c.kernel_two_torsion) j["kernel_two_torsion"] = *c.kernel_two_torsion;
  if (c.polarized && !c.is_polarization()) j["note"] = "weight 1: polarized but not a polarization (needs d > 1)";
  return j;
}

json pair_json(const CounterexamplePairReport& r) {
  return {{"valid", r.valid},
          {"norm", r.norm ? integer(*r.norm) : json(nullptr)},
          {"alpha_is_integer", r.alpha_is_integer},
          {"ratio_root_of_unity_order", r.ratio_unity_order ? json(*r.ratio_unity_order) : json(nullptr)},
          {"diagnostics", r.diagnostics}};
}

template <class P>
json strings(const std::vector<P>& items) {
  json out = json::array();
  for (const auto& x : items) out.push_back(x.to_string());
  return out;
}

json poly_json(const Polynomial<NFE>& p) { return coefficient_literals(p); }

void render(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool scalars = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, out, indent + 2);
    } else if (v.is_array() && !scalars) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render(e, out, indent + 4);
        } else {
          out << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Report& r, const Settings& s, std::ostream& out) {
  const json j{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"verdict", r.verdict}};
  if (s.json_output) {
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  if (!r.inputs.empty()) {
    out << "inputs:\n";
    render(r.inputs, out, 2);
  }
  out << "results:\n";
  render(r.results, out, 2);
  out << "verdict: " << r.verdict << "\n";
}

int exit_code(const Report& r) { return r.verdict == "fail" ? kFail : kPass; }

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// ----------------------------------------------------------------- parsing

GaussianInteger parse_multiplier(const std::string& literal) {
  return to_gaussian_integer(parse_element(gaussian_field(), literal));
}

struct CurveInput {
  std::string field = "Qi";
  std::string a = "1";
  std::string b = "0";
};

EllipticCurve<NFE> make_curve(const std::string& spec) {
  CurveInput in;
  if (!spec.empty()) {
    json j;
    try {
      j = json::parse(spec);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed curve JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("curve spec must be a JSON object {field, a, b}");
    auto text = [&](const char* key, std::string& dst) {
      if (!j.contains(key)) return;
      const json& v = j[key];
      if (v.is_string()) {
        dst = v.get<std::string>();
      } else if (v.is_number_integer()) {
        dst = std::to_string(v.get<std::int64_t>());
      } else if (v.is_object()) {
        dst = v.dump();
      } else {
        throw std::invalid_argument(std::string("curve field '") + key + "' must be a string or integer");
      }
    };
    text("field", in.field);
    text("a", in.a);
    text("b", in.b);
  }
  const NumberFieldPtr field = parse_field(in.field);
  const NFE a = parse_element(field, in.a);
  const NFE b = parse_element(field, in.b);
  std::optional<NFE> unit;
  if (*field == *gaussian_field() && b.is_zero()) unit = nf_generator(field);
  return EllipticCurve<NFE>(a, b, unit);
}

IntegerMatrix parse_matrix(const json& j) {
  const json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
  std::vector<std::vector<GaussianInteger>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<GaussianInteger> r;
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        r.emplace_back(static_cast<long>(e.get<std::int64_t>()));
      } else if (e.is_string()) {
        r.push_back(parse_multiplier(e.get<std::string>()));
      } else {
        throw std::invalid_argument("matrix entries must be integers or Gaussian literals such as \"1+2*w\"");
      }
    }
    out.push_back(std::move(r));
  }
  return IntegerMatrix(std::move(out));
}

IntegerMatrix example_matrix(const std::string& name) {
  // α(x,y,z,t) = (x+z, y+t, x−z, y−t), β(x,y,z,t) = (x+y, x−y, z+t, z−t).
  if (name == "alpha") return parse_matrix(json::parse("[[1,0,1,0],[0,1,0,1],[1,0,-1,0],[0,1,0,-1]]"));
  if (name == "beta") return parse_matrix(json::parse("[[1,1,0,0],[1,-1,0,0],[0,0,1,1],[0,0,1,-1]]"));
  throw std::invalid_argument("unknown example matrix '" + name + "' (expected alpha or beta)");
}

IntegerMatrix load_matrix(const std::string& file, const std::string& example) {
  if (!example.empty()) return example_matrix(example);
  if (file.empty()) throw std::invalid_argument("give --file or --example");
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot read matrix file " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed matrix JSON in " + file + ": " + e.what());
  }
  return parse_matrix(j);
}

ProjectivePoint<NFE> parse_point(const NumberFieldPtr& field, const std::string& literal) {
  if (literal == "inf" || literal == "infinity") return ProjectivePoint<NFE>::infinity();
  return ProjectivePoint<NFE>::affine(parse_element(field, literal));
}

// ---------------------------------------------------------------- commands

Report polarize_cm(const std::string& field_spec, const std::string& alpha_literal) {
  Report r{"polarize cm"};
  r.inputs = {{"field", field_spec}, {"alpha", alpha_literal}};
  const NFE alpha = parse_element(parse_field(field_spec), alpha_literal);
  const PolarizationCertificate cert = cm_polarization_check(alpha);
  r.results = certificate_json(cert);
  r.results["norm"] = (alpha * alpha.conjugate()).to_string();
  r.verdict = pass_fail(cert.polarized);
  return r;
}

Report polarize_pair(const std::string& field_spec, const std::string& alpha_literal) {
  Report r{"polarize pair"};
  r.inputs = {{"field", field_spec}, {"alpha", alpha_literal}};
  const CounterexamplePairReport rep = counterexample_pair_check(parse_element(parse_field(field_spec), alpha_literal));
  r.results = pair_json(rep);
  r.verdict = pass_fail(rep.valid);
  return r;
}

Report polarize_matrix(const std::string& file, const std::string& example, const std::string& other_file,
                       const std::string& other_example, unsigned bound) {
  Report r{"polarize matrix"};
  r.inputs = {{"file", file}, {"example", example}};
  const IntegerMatrix m = load_matrix(file, example);
  const PolarizationCertificate cert = matrix_polarization_check(m);
  r.results = certificate_json(cert);
  r.results["matrix"] = m.to_string();
  r.results["gram"] = (m.conjugate_transpose() * m).to_string();
  bool ok = cert.polarized;
  if (!other_file.empty() || !other_example.empty()) {
    r.inputs["other_file"] = other_file;
    r.inputs["other_example"] = other_example;
    r.inputs["bound"] = bound;
    const IntegerMatrix o = load_matrix(other_file, other_example);
    const auto n = matrix_power_coincidence(m, o, bound);
    r.results["power_coincidence"] = n ? json(*n) : json(nullptr);
    r.results["other"] = certificate_json(matrix_polarization_check(o));
  }
  r.verdict = pass_fail(ok);
  return r;
}

Report curve_two_torsion(const std::string& curve_spec) {
  Report r{"curve two-torsion"};
  r.inputs = {{"curve", curve_spec.empty() ? "y^2 = x^3 + x over Qi" : curve_spec}};
  const EllipticCurve<NFE> curve = make_curve(curve_spec);
  r.results = {{"curve", curve.to_string()}, {"points", strings(two_torsion(curve))}};
  return r;
}

Report curve_kernel(const std::string& curve_spec, const std::string& multiplier) {
  Report r{"curve kernel"};
  r.inputs = {{"curve", curve_spec.empty() ? "y^2 = x^3 + x over Qi" : curve_spec}, {"multiplier", multiplier}};
  const Endomorphism<NFE> f(make_curve(curve_spec), parse_multiplier(multiplier));
  const KernelResult<NFE> ker = kernel(f);
  r.results = {{"degree", integer(f.degree())},
               {"x_polynomial", ker.x_polynomial.to_string()},
               {"points_available", ker.points_available}};
  if (ker.points_available) {
    r.results["points"] = strings(ker.points);
    r.results["extension_degree"] = ker.extension_degree;
  } else {
    r.results["unavailable_reason"] = ker.unavailable_reason;
  }
  return r;
}

json oracle_json(const DivisorSumReport& o) {
  return {{"principal", o.principal},
          {"method", o.method},
          {"prime", o.prime ? json(*o.prime) : json(nullptr)},
          {"kernel_size", o.kernel_size},
          {"sum", o.sum}};
}

Report curve_criterion(const std::string& curve_spec, const std::string& multiplier) {
  Report r{"curve criterion"};
  r.inputs = {{"curve", curve_spec.empty() ? "y^2 = x^3 + x over Qi" : curve_spec}, {"multiplier", multiplier}};
  const Endomorphism<NFE> f(make_curve(curve_spec), parse_multiplier(multiplier));
  const PolarizationCertificate cert = two_torsion_criterion(f);
  const DivisorSumReport oracle = divisor_sum_oracle(f);
  const bool agree = cert.polarized == oracle.principal;
  r.results = {{"criterion", certificate_json(cert)}, {"oracle", oracle_json(oracle)}, {"agree", agree}};
  r.verdict = pass_fail(agree && cert.polarized);
  return r;
}

Report lattes_build(const std::string& curve_spec, const std::string& multiplier, bool expect_reference,
                    unsigned samples, std::uint64_t seed) {
  Report r{"lattes build"};
  r.inputs = {{"curve", curve_spec.empty() ? "y^2 = x^3 + x over Qi" : curve_spec},
              {"multiplier", multiplier},
              {"samples", samples},
              {"seed", seed},
              {"expect_paper_phi", expect_reference}};
  const GaussianInteger m = parse_multiplier(multiplier);
  const LattesMap<NFE> lattes = build_lattes(Endomorphism<NFE>(make_curve(curve_spec), m));
  const auto [num, den] = integral_presentation(lattes.map);
  const SemiconjugacyReport semi = verify_semiconjugacy(lattes, samples, seed);
  r.results = {{"degree", lattes.degree()},
               {"formula", lattes.map.to_string()},
               {"numerator", poly_json(num)},
               {"denominator", poly_json(den)},
               {"semiconjugacy", {{"checked", semi.checked}, {"failures", semi.failures}, {"passed", semi.passed()}}}};
  bool ok = samples == 0 || semi.passed();
  if (expect_reference) {
    const bool is_psi = m == GaussianInteger(2, -1);
    const bool match = lattes.map == (is_psi ? reference_psi() : reference_phi());
    r.results["reference"] = is_psi ? "psi" : "phi";
    r.results["matches_reference"] = match;
    ok = ok && match;
    r.verdict = pass_fail(ok);
  } else if (!ok) {
    r.verdict = "fail";
  }
  return r;
}

Report dynamics_orbit(const std::string& multiplier, const std::string& start, unsigned budget,
                      std::optional<double> threshold) {
  Report r{"dynamics orbit"};
  r.inputs = {{"map_of", multiplier}, {"start", start}, {"budget", budget}};
  if (threshold) r.inputs["height_threshold"] = *threshold;
  const LattesMap<NFE> lattes = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), parse_multiplier(multiplier)));
  OrbitOptions opts;
  opts.budget = budget;
  opts.height_threshold = threshold;
  opts.trace_length = 6;
  const OrbitRecord<NFE> rec = orbit(parse_point(gaussian_field(), start), lattes.map, opts);
  r.results = {{"outcome", to_string(rec.outcome)}, {"iterations", rec.iterations},
               {"final_height", rounded(rec.final_height)}, {"trace", strings(rec.trace)}};
  if (rec.outcome == OrbitOutcome::Preperiodic) {
    r.results["tail"] = rec.tail;
    r.results["cycle"] = rec.cycle;
  }
  return r;
}

Report dynamics_height(const std::string& multiplier, const std::string& start, unsigned steps) {
  Report r{"dynamics height-probe"};
  r.inputs = {{"map_of", multiplier}, {"start", start}, {"steps", steps}};
  const LattesMap<NFE> lattes = build_lattes(Endomorphism<NFE>(gaussian_cm_curve(), parse_multiplier(multiplier)));
  const HeightProbe probe = height_growth_probe(lattes.map, parse_point(gaussian_field(), start), steps);
  json heights = json::array(), ratios = json::array();
  for (double h : probe.heights) heights.push_back(rounded(h));
  for (double q : probe.ratios) ratios.push_back(rounded(q));
  r.results = {{"applicable", probe.applicable}, {"heights", heights}, {"ratios", ratios}, {"note", probe.note},
               {"degree", lattes.degree()}, {"ratios_within_band", probe.ratios_within(lattes.degree())}};
  return r;
}

json counterexample_json(const CounterexampleReport& rep) {
  json stages = json::array();
  for (const auto& s : rep.stages) stages.push_back({{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
  return {{"stages", stages}, {"verdict", rep.verdict()}};
}

Report dynamics_verify(bool corrupt, const std::string& stage4, const std::vector<std::int64_t>& orders, unsigned n_max) {
  Report r{"dynamics verify-counterexample"};
  CounterexampleOptions opts;
  opts.corrupt_formula = corrupt;
  opts.stage4_multiplier = parse_multiplier(stage4);
  if (!orders.empty()) opts.torsion_orders = orders;
  opts.n_max = n_max;
  r.inputs = {{"corrupt_formula", corrupt}, {"stage4_multiplier", stage4}, {"orders", opts.torsion_orders},
              {"n_max", n_max}};
  const CounterexampleReport rep = verify_counterexample(opts);
  r.results = counterexample_json(rep);
  r.verdict = pass_fail(rep.verified());
  return r;
}

json frobenius_json(const FrobeniusData& d) {
  const S3Report s3 = s3_membership(d);
  return {{"p", d.reduced.p},
          {"iota", d.reduced.iota.value()},
          {"alpha", d.alpha.to_string()},
          {"norm", integer(d.alpha.norm())},
          {"trace", d.trace},
          {"point_count", d.point_count},
          {"s3", {{"member", s3.member}, {"ratio_order", s3.ratio_order ? json(*s3.ratio_order) : json(nullptr)}}}};
}

Report frobenius_identify(std::uint64_t p, unsigned iota_choice) {
  Report r{"frobenius identify"};
  r.inputs = {{"p", p}, {"iota_choice", iota_choice}};
  r.results = frobenius_json(identify_frobenius(reduce_curve(gaussian_cm_curve(), p, iota_choice)));
  return r;
}

json check_json(const FrobeniusCheck& c) {
  return {{"frobenius_action", c.frobenius_action},
          {"composition_is_norm", c.composition_is_norm},
          {"hasse", c.hasse},
          {"point_count", c.point_count},
          {"frobenius_certificate", certificate_json(c.frobenius_certificate)},
          {"verschiebung_certificate", certificate_json(c.verschiebung_certificate)},
          {"passed", c.passed()}};
}

Report frobenius_verify(std::uint64_t p, unsigned iota_choice) {
  Report r{"frobenius verify"};
  r.inputs = {{"p", p}, {"iota_choice", iota_choice}};
  const FrobeniusData data = identify_frobenius(reduce_curve(gaussian_cm_curve(), p, iota_choice));
  const FrobeniusCheck check = verify_frobenius_verschiebung(data);
  r.results = frobenius_json(data);
  r.results["checks"] = check_json(check);
  r.verdict = pass_fail(check.passed());
  return r;
}

// ------------------------------------------------------------ reproduction

struct Stage {
  std::string name;
  bool pass = true;
  json details = json::object();

  void expect(bool ok, const std::string& what) {
    details[what] = ok;
    pass = pass && ok;
  }
};

Stage stage_cyclotomic() {
  Stage s{"cyclotomic-norm"};
  const NumberFieldPtr q5 = cyclotomic5_field();
  const NFE z = parse_element(q5, "4+3*w+12*w^2");
  const auto norm = is_rational_integer(z * z.conjugate());
  s.expect(norm && *norm == 121, "z*conj(z) = 121");
  s.expect(!is_root_of_unity(z / z.conjugate()), "z/conj(z) not a root of unity");
  const auto cz = cm_polarization_check(z);
  s.expect(cz.polarized && cz.weight == 121, "[z] polarized with weight 121");
  s.expect(!cm_polarization_check(parse_element(q5, "1+w")).polarized, "[1+zeta5] not polarized");
  return s;
}

Stage stage_two_torsion() {
  Stage s{"two-torsion-criterion"};
  const EllipticCurve<NFE> e = gaussian_cm_curve();
  const Endomorphism<NFE> f(e, GaussianInteger(1, 1)), g(e, GaussianInteger(2, 1));
  const auto cf = two_torsion_criterion(f), cg = two_torsion_criterion(g);
  const auto of = divisor_sum_oracle(f), og = divisor_sum_oracle(g);
  s.expect(!cf.polarized && cf.kernel_two_torsion == 2u, "[1+i]: m = 2, not polarized");
  s.expect(!of.principal, "[1+i]: kernel sum is not O");
  s.expect(cg.polarized && cg.kernel_two_torsion == 1u && cg.weight == 5, "[2+i]: m = 1, weight 5");
  s.expect(og.principal, "[2+i]: kernel sum is O");
  const auto c2 = cm_polarization_check(to_gaussian_element(GaussianInteger(2, 1)));
  s.expect(c2.polarized && c2.weight == 5, "[2+i] Rosati weight 5");
  return s;
}

Stage stage_matrix() {
  Stage s{"matrix-example"};
  const IntegerMatrix a = example_matrix("alpha"), b = example_matrix("beta");
  const auto ca = matrix_polarization_check(a), cb = matrix_polarization_check(b);
  s.expect(ca.polarized && ca.weight == 2, "alpha weight 2");
  s.expect(cb.polarized && cb.weight == 2, "beta weight 2");
  s.expect(matrix_power_coincidence(a, b, 24) == 2u, "alpha^2 = beta^2, least n = 2");
  return s;
}

Stage stage_weight_division() {
  Stage s{"weight-division"};
  const WeightDivision w = weight_division(5, 25, 1);
  s.expect(w.weight == 5 && w.degree == 5, "weight_division(5, 25, 1) = (5, 5)");
  bool refused = false;
  try {
    weight_division(2, 5, 1);
  } catch (const std::domain_error&) {
    refused = true;
  }
  s.expect(refused, "weight_division(2, 5, 1) refused");
  return s;
}

Stage stage_lattes(std::uint64_t seed) {
  Stage s{"lattes-maps"};
  const EllipticCurve<NFE> e = gaussian_cm_curve();
  const LattesMap<NFE> phi = build_lattes(Endomorphism<NFE>(e, GaussianInteger(2, 1)));
  const LattesMap<NFE> psi = build_lattes(Endomorphism<NFE>(e, GaussianInteger(2, -1)));
  s.expect(phi.map == reference_phi(), "phi matches the reference formula");
  s.expect(psi.map == reference_psi(), "psi matches the reference formula");
  s.expect(phi.degree() == 5 && psi.degree() == 5, "both maps have degree 5");
  s.expect(verify_semiconjugacy(phi, 50, seed).passed(), "phi semiconjugacy at 50 points");
  s.expect(verify_semiconjugacy(psi, 50, seed + 1).passed(), "psi semiconjugacy at 50 points");
  const auto cert = product_pullback_check(phi.map, psi.map);
  s.expect(cert.polarized && cert.weight == 5, "delta*D ~ 5D");
  return s;
}

Stage stage_counterexample() {
  Stage s{"counterexample"};
  const CounterexampleReport rep = verify_counterexample();
  s.details["stages"] = counterexample_json(rep)["stages"];
  s.expect(rep.verified(), "all four stages pass");
  CounterexampleOptions neg;
  neg.stage4_multiplier = GaussianInteger(1, 1);
  neg.torsion_orders = {2};
  const CounterexampleReport bad = verify_counterexample(neg);
  const bool fails_at_4 = !bad.stages.at(3).pass && bad.stages.at(3).details.find("order 4") != std::string::npos;
  s.expect(fails_at_4, "multiplier 1+i fails the diagonal-escape stage with order 4");
  return s;
}

Stage stage_frobenius() {
  Stage s{"frobenius"};
  for (std::uint64_t p : {5ULL, 13ULL}) {
    const FrobeniusData d = identify_frobenius(reduce_curve(gaussian_cm_curve(), p));
    const FrobeniusCheck c = verify_frobenius_verschiebung(d);
    s.details["p=" + std::to_string(p)] = frobenius_json(d);
    s.expect(c.passed(), "p = " + std::to_string(p) + " Frobenius and Verschiebung checks");
  }
  return s;
}

Stage stage_heights(std::uint64_t seed) {
  Stage s{"height-growth"};
  const RationalFunction<NFE> phi = reference_phi();
  Rng rng(seed);
  json ratios = json::array();
  bool ok = true;
  unsigned found = 0;
  while (found < 10) {
    const NFE x = random_element(gaussian_field(), rng, 6, 3);
    if (naive_height(x) < std::log(2.0)) continue;
    const HeightProbe probe = height_growth_probe(phi, ProjectivePoint<NFE>::affine(x), 3);
    if (probe.ratios.size() < 3) continue;
    ++found;
    const double r = probe.ratios[2];
    ratios.push_back(rounded(r));
    ok = ok && r >= 3.5 && r <= 6.5;
  }
  s.details["step3_ratios"] = ratios;
  s.expect(ok, "step-3 log-height ratios in [3.5, 6.5]");
  return s;
}

Report reproduce(std::uint64_t seed) {
  Report r{"reproduce-paper"};
  r.inputs = {{"seed", seed}};
  std::vector<Stage> stages;
  stages.push_back(stage_cyclotomic());
  stages.push_back(stage_two_torsion());
  stages.push_back(stage_matrix());
  stages.push_back(stage_weight_division());
  stages.push_back(stage_lattes(seed));
  stages.push_back(stage_counterexample());
  stages.push_back(stage_frobenius());
  stages.push_back(stage_heights(seed));
  json arr = json::array();
  bool ok = true;
  for (const auto& s : stages) {
    arr.push_back({{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
    ok = ok && s.pass;
  }
  r.results = {{"stages", arr}};
  r.verdict = pass_fail(ok);
  return r;
}

// ------------------------------------------------------------------ config

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw CLI::ValidationError("--config", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw CLI::ValidationError("--config", "config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key();
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    if (has_flag(args, flag)) continue;
    const json& v = it.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back(flag);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
      args.push_back(flag);
      args.push_back(joined);
    } else {
      args.push_back(flag);
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarizability criteria, Lattes maps and the CM counterexample on y^2 = x^3 + x", "polarmm"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  std::string config;
  app.add_flag("--json", settings.json_output, "Emit a JSON report");
  app.add_option("--seed", settings.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--budget", settings.budget, "Iteration budget for orbits")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--config", config, "JSON file of flag values; command-line flags win");

  std::string field = "Qi", alpha, curve_spec, multiplier, file, example, other_file, other_example, start, stage4 = "2+1*w";
  unsigned bound = 24, samples = 50, n_max = 3, steps = 4, iota_choice = 0;
  std::uint64_t prime = 0;
  bool expect_reference = false, corrupt = false;
  std::optional<double> threshold;
  std::vector<std::int64_t> orders;

  auto* polarize = app.add_subcommand("polarize", "Polarizability criteria")->require_subcommand(1);
  auto* pol_cm = polarize->add_subcommand("cm", "Rosati norm criterion for a CM multiplier");
  auto* pol_pair = polarize->add_subcommand("pair", "Counterexample conditions on (alpha, conj(alpha))");
  auto* pol_matrix = polarize->add_subcommand("matrix", "Product polarization M^dagger M = d I");
  for (auto* sub : {pol_cm, pol_pair}) {
    sub->add_option("--field", field, "Qi, Qzeta5 or inline JSON")->capture_default_str();
    sub->add_option("--alpha", alpha, "Element literal, e.g. \"2+1*w\"")->required();
  }
  pol_matrix->add_option("--file", file, "JSON matrix file");
  pol_matrix->add_option("--example", example, "Built-in matrix: alpha or beta");
  pol_matrix->add_option("--other-file", other_file, "Second matrix for the power coincidence");
  pol_matrix->add_option("--other-example", other_example, "Second built-in matrix");
  pol_matrix->add_option("--bound", bound, "Largest power tried")->capture_default_str()->check(CLI::PositiveNumber);

  auto* curve = app.add_subcommand("curve", "Elliptic curve and CM endomorphisms")->require_subcommand(1);
  auto* cur_two = curve->add_subcommand("two-torsion", "List E[2]");
  auto* cur_kernel = curve->add_subcommand("kernel", "Kernel polynomial and points");
  auto* cur_crit = curve->add_subcommand("criterion", "Two-torsion criterion against the divisor-sum oracle");
  for (auto* sub : {cur_two, cur_kernel, cur_crit}) {
    sub->add_option("--curve", curve_spec, "JSON {field, a, b}; default y^2 = x^3 + x over Qi");
  }
  for (auto* sub : {cur_kernel, cur_crit}) sub->add_option("--multiplier", multiplier, "Gaussian integer a+b*w")->required();

  auto* lattes = app.add_subcommand("lattes", "Lattes maps")->require_subcommand(1);
  auto* lat_build = lattes->add_subcommand("build", "Build the Lattes map of a multiplier");
  lat_build->add_option("--curve", curve_spec, "JSON {field, a, b}");
  lat_build->add_option("--multiplier", multiplier, "Gaussian integer a+b*w")->required();
  lat_build->add_flag("--expect-paper-phi", expect_reference, "Compare with the built-in formulas for 2+i and 2-i");
  lat_build->add_option("--samples", samples, "Semiconjugacy sample points")->capture_default_str();

  auto* dyn = app.add_subcommand("dynamics", "Orbits and the counterexample")->require_subcommand(1);
  auto* dyn_orbit = dyn->add_subcommand("orbit", "Orbit of a point under a Lattes map");
  auto* dyn_height = dyn->add_subcommand("height-probe", "Naive heights along an orbit");
  for (auto* sub : {dyn_orbit, dyn_height}) {
    sub->add_option("--map-of", multiplier, "Multiplier whose Lattes map is iterated")->required();
    sub->add_option("--start", start, "Start point in Qi, or inf")->required();
  }
  dyn_orbit->add_option("--height-threshold", threshold, "Divergence threshold (default 50 h(x0) + 50)");
  dyn_height->add_option("--steps", steps, "Iterations")->capture_default_str();
  auto* dyn_verify = dyn->add_subcommand("verify-counterexample", "Four-stage counterexample verification");
  dyn_verify->add_flag("--corrupt-formula", corrupt, "Negative control for stage 1");
  dyn_verify->add_option("--stage4-multiplier", stage4, "Multiplier for the diagonal-escape stage")->capture_default_str();
  dyn_verify->add_option("--orders", orders, "Torsion orders, default 2,3,4,5")->delimiter(',');
  dyn_verify->add_option("--n-max", n_max, "Largest iterate compared")->capture_default_str()->check(CLI::PositiveNumber);

  auto* frob = app.add_subcommand("frobenius", "Frobenius at split primes")->require_subcommand(1);
  auto* frob_id = frob->add_subcommand("identify", "Identify the Frobenius multiplier");
  auto* frob_verify = frob->add_subcommand("verify", "Check F o V = [p] and the weights");
  for (auto* sub : {frob_id, frob_verify}) {
    sub->add_option("--p", prime, "Split prime p = 1 mod 4")->required();
    sub->add_option("--iota-choice", iota_choice, "Which square root of -1 mod p (0 or 1)")->capture_default_str();
  }

  auto* repro = app.add_subcommand("reproduce-paper", "Run every reproduction stage");

  std::vector<std::string> args;
  try {
    args = apply_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  std::string command = "polarmm";
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* leaf : sub->get_subcommands()) command += " " + leaf->get_name();
  }
  try {
    Report report;
    if (pol_cm->parsed()) {
      report = polarize_cm(field, alpha);
    } else if (pol_pair->parsed()) {
      report = polarize_pair(field, alpha);
    } else if (pol_matrix->parsed()) {
      report = polarize_matrix(file, example, other_file, other_example, bound);
    } else if (cur_two->parsed()) {
      report = curve_two_torsion(curve_spec);
    } else if (cur_kernel->parsed()) {
      report = curve_kernel(curve_spec, multiplier);
    } else if (cur_crit->parsed()) {
      report = curve_criterion(curve_spec, multiplier);
    } else if (lat_build->parsed()) {
      report = lattes_build(curve_spec, multiplier, expect_reference, samples, settings.seed);
    } else if (dyn_orbit->parsed()) {
      report = dynamics_orbit(multiplier, start, settings.budget, threshold);
    } else if (dyn_height->parsed()) {
      report = dynamics_height(multiplier, start, steps);
    } else if (dyn_verify->parsed()) {
      report = dynamics_verify(corrupt, stage4, orders, n_max);
    } else if (frob_id->parsed()) {
      report = frobenius_identify(prime, iota_choice);
    } else if (frob_verify->parsed()) {
      report = frobenius_verify(prime, iota_choice);
    } else if (repro->parsed()) {
      report = reproduce(settings.seed);
    }
    emit(report, settings, out);
    return exit_code(report);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and out_of_range all signal bad input.
    const bool input_error = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
                             dynamic_cast<const std::out_of_range*>(&e);
    if (settings.json_output) {
      out << json{{"command", command}, {"error", e.what()}, {"verdict", input_error ? "usage-error" : "error"}}.dump(2)
          << "\n";
    }
    err << "polarmm " << command << ": " << e.what() << "\n";
    return input_error ? kUsage : kFail;
  } catch (const std::exception& e) {
    if (settings.json_output) out << json{{"command", command}, {"error", e.what()}, {"verdict", "error"}}.dump(2) << "\n";
    err << "polarmm " << command << ": " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace polarmm::cli
