#pragma once

#include <json.hpp>

#include "fibint/haar.hpp"
#include "fibint/poly.hpp"
#include "fibint/pushforward.hpp"
#include "fibint/rootsys.hpp"
#include "fibint/subalgebra.hpp"

namespace fibint {

/// Insertion-ordered JSON keeps reports byte-reproducible.
using Json = nlohmann::ordered_json;

/// {"vars": m, "terms": {"e1,...,em": "num/den", ...}} with terms emitted
/// leading monomial first. Round-trips to an identical canonical form.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json vecq_to_json(const VecQ& v);
VecQ vecq_from_json(const Json& j);

Json orbit_to_json(const std::string& group, const OrbitPoint& orbit);
Json char_classes_to_json(const std::string& group, const CharClassSet& set);
Json coupling_to_json(const std::string& group, const CouplingForm& form);
Json subalgebra_report_to_json(const SubalgebraReport& report);
Json independence_to_json(const IndependenceReport& report);
Json containment_to_json(const ContainmentVerdict& verdict);
Json moment_to_json(const MomentEstimate& estimate);
Json fit_to_json(const FitReport& report);

}  // namespace fibint
