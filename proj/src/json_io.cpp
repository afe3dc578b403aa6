#include "fibint/json_io.hpp"

#include "fibint/errors.hpp"

namespace fibint {

namespace {

std::string mono_key(const Mono& m) {
  std::string key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) key.push_back(',');
    key += std::to_string(m[i]);
  }
  return key;
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json terms = Json::object();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it)
    terms[mono_key(it->first)] = rational_str(it->second);
  return Json{{"vars", p.nvars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
  if (!j.contains("vars") || !j.contains("terms"))
    throw domain_error("polynomial JSON needs 'vars' and 'terms'");
  int nvars = j.at("vars").get<int>();
  Poly p(nvars);
  for (const auto& [key, value] : j.at("terms").items()) {
    Mono m;
    std::size_t start = 0;
    while (start <= key.size()) {
      std::size_t comma = key.find(',', start);
      std::string piece = comma == std::string::npos ? key.substr(start)
                                                     : key.substr(start, comma - start);
      m.push_back(std::stoi(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(m.size()) != nvars)
      throw domain_error("exponent key '" + key + "' does not match vars = " +
                         std::to_string(nvars));
    for (int e : m)
      if (e < 0) throw domain_error("negative exponent in key '" + key + "'");
    p.add_term(m, parse_rational(value.get<std::string>()));
  }
  return p;
}

Json vecq_to_json(const VecQ& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rational_str(q));
  return out;
}

VecQ vecq_from_json(const Json& j) {
  VecQ out;
  for (const auto& item : j) out.push_back(parse_rational(item.get<std::string>()));
  return out;
}

Json orbit_to_json(const std::string& group, const OrbitPoint& orbit) {
  return Json{{"group", group},
              {"xi", vecq_to_json(orbit.xi)},
              {"stabilizer_simples", orbit.stabilizer_simples},
              {"face_dim", orbit.face_dim}};
}

Json coupling_to_json(const std::string& group, const CouplingForm& form) {
  return Json{{"orbit", orbit_to_json(group, form.orbit)},
              {"linear_form", poly_to_json(form.linear_form)}};
}

Json char_classes_to_json(const std::string& group, const CharClassSet& set) {
  Json classes = Json::object();
  for (const auto& [k, p] : set.classes) classes[std::to_string(k)] = poly_to_json(p);
  return Json{{"orbit", orbit_to_json(group, set.orbit)},
              {"n_fiber", set.n_fiber},
              {"classes", std::move(classes)}};
}

Json subalgebra_report_to_json(const SubalgebraReport& report) {
  Json points = Json::array();
  for (const VecQ& u : report.sample.sample_points) points.push_back(vecq_to_json(u));
  Json face = Json::array();
  for (const VecQ& b : report.sample.face_basis) face.push_back(vecq_to_json(b));
  Json k_values = Json::array();
  Json per_k = Json::object();
  for (const auto& [k, polys] : report.sample.powers_used) {
    k_values.push_back(k);
    per_k[std::to_string(k)] = polys.size();
  }
  return Json{{"orbit", orbit_to_json(report.group, report.orbit)},
              {"cutoff", report.cutoff},
              {"algebra_dims", report.algebra_dims},
              {"invariant_dims", report.invariant_dims},
              {"full_up_to_cutoff", report.full_up_to_cutoff},
              {"missing_degrees", report.missing_degrees},
              {"saturated", report.saturated},
              {"generators",
               Json{{"face_basis", std::move(face)},
                    {"sample_points", std::move(points)},
                    {"k_values", std::move(k_values)},
                    {"pushforwards_per_k", std::move(per_k)},
                    {"seed", report.sample.seed}}}};
}

Json independence_to_json(const IndependenceReport& report) {
  Json points = Json::array();
  for (const VecQ& p : report.points) points.push_back(vecq_to_json(p));
  return Json{{"rank", report.rank},
              {"certified", report.certified},
              {"k_used", report.k_used},
              {"n_vars", report.n_vars},
              {"points", std::move(points)},
              {"seed", report.seed},
              {"note", report.certified
                           ? "rank reached min(#classes, #vars): independence certified"
                           : "rank deficient at all samples: not certified "
                             "independent (no proof of dependence)"}};
}

Json containment_to_json(const ContainmentVerdict& verdict) {
  Json rows = Json::array();
  for (const DegreeContainment& row : verdict.per_degree)
    rows.push_back(Json{{"degree", row.degree},
                        {"dim_inner", row.dim_inner},
                        {"dim_outer", row.dim_outer},
                        {"contained", row.contained}});
  Json out{{"contained", verdict.contained}, {"per_degree", std::move(rows)}};
  if (verdict.first_failing_degree)
    out["first_failing_degree"] = *verdict.first_failing_degree;
  else
    out["first_failing_degree"] = nullptr;
  return out;
}

Json moment_to_json(const MomentEstimate& estimate) {
  return Json{{"k", estimate.k},
              {"value", estimate.value},
              {"std_error", estimate.std_error},
              {"samples", estimate.samples},
              {"group", estimate.group},
              {"xi", vecq_to_json(estimate.xi)},
              {"X", vecq_to_json(estimate.X)},
              {"seed", estimate.seed}};
}

Json fit_to_json(const FitReport& report) {
  Json rows = Json::array();
  for (const FitRow& row : report.rows) {
    Json r{{"k", row.k},
           {"symbolic", row.symbolic},
           {"moment", row.moment},
           {"std_error", row.std_error},
           {"binom", row.binom}};
    if (row.symbolic_zero) {
      r["symbolic_zero"] = true;
      r["sigma_from_zero"] = row.sigma;
    } else {
      r["deviation_rel"] = row.deviation_rel;
      r["sigma"] = row.sigma;
    }
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  return Json{{"base_k", report.base_k},
              {"fitted_constant", report.fitted_constant},
              {"c_symbolic_over_numeric", report.c_symbolic_over_numeric},
              {"tolerance_rel", report.tol_rel},
              {"tolerance_sigma", report.tol_sigma},
              {"rows", std::move(rows)},
              {"pass", report.pass}};
}

}  // namespace fibint
