#include "fibint/cli.hpp"

#include <chrono>
#include <ctime>

#include "fibint/errors.hpp"
#include "fibint/graded.hpp"

namespace fibint {

namespace {

std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

VecQ parse_vector_field(const std::string& text, const char* field) {
  if (text.empty())
    throw domain_error(std::string("missing required field '") + field + "'");
  try {
    return parse_rational_vector(text);
  } catch (const domain_error& e) {
    throw domain_error(std::string("field '") + field + "': " + e.what());
  }
}

Json config_to_json(const JobConfig& c) {
  return Json{{"command", c.command}, {"group", c.group},
              {"xi", c.xi},           {"eta", c.eta},
              {"X", c.x_eval},        {"cutoff", c.cutoff},
              {"k_max", c.k_max},     {"max_degree", c.max_degree},
              {"samples", c.samples}, {"seed", c.seed},
              {"threads", c.threads}, {"output", c.output}};
}

struct Dispatched {
  Json result;
  std::string summary;
};

Dispatched cmd_compute(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  WeylGroup weyl = WeylGroup::enumerate(rs);
  OrbitPoint orbit = classify_orbit(rs, parse_vector_field(c.xi, "xi"));
  CharClassSet classes = char_classes(weyl, orbit, c.k_max);
  Json result = char_classes_to_json(rs.label(), classes);
  result["coupling_form"] = poly_to_json(coupling_form(rs, orbit).linear_form);
  int nonzero = 0;
  for (const auto& [k, p] : classes.classes)
    if (!p.is_zero()) ++nonzero;
  return {std::move(result),
          "computed " + std::to_string(classes.classes.size()) + " classes (" +
              std::to_string(nonzero) + " nonzero) for " + rs.label()};
}

Dispatched cmd_fullness(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  WeylGroup weyl = WeylGroup::enumerate(rs);
  OrbitPoint orbit = classify_orbit(rs, parse_vector_field(c.xi, "xi"));
  SubalgebraReport report = generate_subalgebra(weyl, orbit, c.cutoff, c.seed);
  Json result = subalgebra_report_to_json(report);
  Json membership = Json::object();
  for (const auto& [name, poly] : standard_generators(rs)) {
    if (poly.degree() > c.cutoff) continue;
    membership[name] = report.basis->contains(poly);
  }
  result["generator_membership"] = std::move(membership);
  result["generator_note"] =
      "A-type c_k are elementary symmetric in the Chern roots; some "
      "references use the opposite sign (-1)^k";
  std::string verdict = report.full_up_to_cutoff ? "full" : "not full";
  return {std::move(result), rs.label() + " orbit is " + verdict +
                                 " up to degree " + std::to_string(c.cutoff)};
}

Dispatched cmd_independence(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  WeylGroup weyl = WeylGroup::enumerate(rs);
  OrbitPoint orbit = classify_orbit(rs, parse_vector_field(c.xi, "xi"));
  IndependenceReport report = independence_report(weyl, orbit, c.k_max, c.seed);
  return {independence_to_json(report),
          "Jacobian rank " + std::to_string(report.rank) +
              (report.certified ? " (certified)" : " (not certified)")};
}

Dispatched cmd_semicontinuity(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  WeylGroup weyl = WeylGroup::enumerate(rs);
  OrbitPoint inner = classify_orbit(rs, parse_vector_field(c.xi, "xi"));
  OrbitPoint outer = classify_orbit(rs, parse_vector_field(c.eta, "eta"));
  ContainmentVerdict verdict = semicontinuity_check(weyl, inner, outer, c.cutoff, c.seed);
  Json result = containment_to_json(verdict);
  result["inner_orbit"] = orbit_to_json(rs.label(), inner);
  result["outer_orbit"] = orbit_to_json(rs.label(), outer);
  return {std::move(result), verdict.contained
                                 ? "contained in every degree"
                                 : "containment fails first in degree " +
                                       std::to_string(*verdict.first_failing_degree)};
}

Dispatched cmd_product(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  VecQ xi = parse_vector_field(c.xi, "xi");
  if (static_cast<int>(xi.size()) != rs.ambient_dim())
    throw domain_error("xi has " + std::to_string(xi.size()) +
                       " coordinates, expected " + std::to_string(rs.ambient_dim()));

  std::vector<SubalgebraReport> factor_reports;
  for (const SimpleFactor& f : rs.factors()) {
    RootSystem frs = RootSystem::build(f.family, f.rank);
    WeylGroup fweyl = WeylGroup::enumerate(frs);
    VecQ fxi(xi.begin() + f.ambient_offset,
             xi.begin() + f.ambient_offset + f.ambient_dim);
    OrbitPoint forbit = classify_orbit(frs, fxi);
    factor_reports.push_back(generate_subalgebra(fweyl, forbit, c.cutoff, c.seed));
  }
  SubalgebraReport convolved = product_subalgebra(factor_reports);

  WeylGroup weyl = WeylGroup::enumerate(rs);
  OrbitPoint orbit = classify_orbit(rs, xi);
  SubalgebraReport direct = generate_subalgebra(weyl, orbit, c.cutoff, c.seed);

  bool agree = convolved.algebra_dims == direct.algebra_dims &&
               convolved.invariant_dims == direct.invariant_dims;
  Json result{{"convolution", subalgebra_report_to_json(convolved)},
              {"direct", subalgebra_report_to_json(direct)},
              {"paths_agree", agree}};
  Json factors = Json::array();
  for (const SubalgebraReport& r : factor_reports)
    factors.push_back(subalgebra_report_to_json(r));
  result["factors"] = std::move(factors);
  if (!agree)
    throw integrity_error(
        "direct-sum and convolution computations of the product subalgebra "
        "disagree");
  return {std::move(result), "product dims agree between direct sum and convolution"};
}

Dispatched cmd_oracle(const JobConfig& c) {
  CompactGroup group = parse_compact_group(c.group);
  VecQ xi = parse_vector_field(c.xi, "xi");
  VecQ x_eval = c.x_eval.empty() ? xi : parse_vector_field(c.x_eval, "X");
  std::vector<int> ks;
  for (int k = 1; k <= c.k_max; ++k) ks.push_back(k);
  std::vector<MomentEstimate> estimates =
      moment_estimates(group, xi, x_eval, ks, c.samples, c.seed, c.threads);

  Json est = Json::array();
  for (const MomentEstimate& e : estimates) est.push_back(moment_to_json(e));
  Json result{{"group", group.label()}, {"estimates", std::move(est)}};

  if (group.special_unitary) {
    RootSystem rs = RootSystem::build('A', group.n - 1);
    WeylGroup weyl = WeylGroup::enumerate(rs);
    OrbitPoint orbit = classify_orbit(rs, xi);
    CharClassSet classes = char_classes(weyl, orbit, c.k_max);
    FitReport fit = fit_and_compare(rs, classes, estimates, x_eval);
    result["fit"] = fit_to_json(fit);
    result["verdict"] = fit.pass ? "PASS" : "FAIL";
    return {std::move(result), std::string("oracle ") + (fit.pass ? "PASS" : "FAIL") +
                                   " for " + group.label()};
  }
  // The diagonal embedding used by the sampler is not the adjoint
  // representation for SO(n), so there is no symbolic counterpart to fit.
  result["fit"] = nullptr;
  result["verdict"] = "ESTIMATES_ONLY";
  return {std::move(result), "moment estimates for " + group.label()};
}

Dispatched cmd_molien(const JobConfig& c) {
  RootSystem rs = RootSystem::parse(c.group);
  WeylGroup weyl = WeylGroup::enumerate(rs);
  std::vector<long long> dims = molien_dims(weyl, c.max_degree);
  Json result{{"group", rs.label()},
              {"weyl_order", rs.weyl_order()},
              {"max_degree", c.max_degree},
              {"invariant_dims", dims}};
  return {std::move(result), "Molien dimensions computed for " + rs.label()};
}

}  // namespace

Json strip_timestamp(Json report) {
  report.erase("timestamp");
  return report;
}

JobResult run_job(const JobConfig& config) {
  JobResult out;
  Json envelope{{"schema", "1"},
                {"command", config.command},
                {"config", config_to_json(config)},
                {"timestamp", iso8601_now()}};
  try {
    Dispatched d;
    if (config.command == "compute")
      d = cmd_compute(config);
    else if (config.command == "fullness")
      d = cmd_fullness(config);
    else if (config.command == "independence")
      d = cmd_independence(config);
    else if (config.command == "semicontinuity")
      d = cmd_semicontinuity(config);
    else if (config.command == "product")
      d = cmd_product(config);
    else if (config.command == "oracle")
      d = cmd_oracle(config);
    else if (config.command == "molien")
      d = cmd_molien(config);
    else
      throw config_error("unknown command '" + config.command + "'");
    envelope["result"] = std::move(d.result);
    out.exit_code = 0;
    out.summary = std::move(d.summary);
  } catch (const integrity_error& e) {
    envelope["error"] = Json{{"type", "integrity_error"}, {"message", e.what()}};
    out.exit_code = 2;
    out.summary = std::string("integrity error: ") + e.what();
  } catch (const config_error& e) {
    envelope["error"] = Json{{"type", "config_error"}, {"message", e.what()}};
    out.exit_code = 1;
    out.summary = std::string("configuration error: ") + e.what();
  } catch (const resource_error& e) {
    envelope["error"] = Json{{"type", "resource_error"}, {"message", e.what()}};
    out.exit_code = 1;
    out.summary = std::string("resource error: ") + e.what();
  } catch (const domain_error& e) {
    envelope["error"] = Json{{"type", "domain_error"}, {"message", e.what()}};
    out.exit_code = 1;
    out.summary = std::string("domain error: ") + e.what();
  }
  out.report = std::move(envelope);
  return out;
}

}  // namespace fibint
