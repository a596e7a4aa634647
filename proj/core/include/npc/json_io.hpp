#pragma once

// JSON forms of the library's values. Point ids are 1-based in JSON.
//
//   constellation  {"d":2,"points":[{"id":1},{"id":2,"parent":1,"prox":[1]}]}
//   ideal          {"d":2,"gens":[[2,0],[0,3]]}   (a string "x^2, y^3" is also accepted)
//   divisor        [2,3,6]   (aligned with point order)

#include <string>
#include <vector>

#include <json.hpp>

#include "npc/cohomology.hpp"
#include "npc/constellation.hpp"
#include "npc/harness.hpp"
#include "npc/monomial.hpp"
#include "npc/principalize.hpp"

namespace npc {

using Json = nlohmann::ordered_json;

Json to_json(const Constellation& c);
Constellation constellation_from_json(const Json& j);

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j, std::optional<int> dim = std::nullopt);

Json to_json(const IntegerVector& v);
IntegerVector integers_from_json(const Json& j);

Json to_json(const PrincipalizationTree& tree);
/// Rebuilds a tree written by to_json and re-verifies it.
PrincipalizationTree tree_from_json(const Json& j);

Json to_json(const NotFinitelySupported& nfs);
Json to_json(const CohomReport& report);
Json to_json(const InjectivityReport& report);
Json to_json(const CheckReport& report);

/// One header line plus one row per report.
std::string reports_to_csv(const std::vector<CheckReport>& reports);

Json read_json_file(const std::string& path);

}  // namespace npc
