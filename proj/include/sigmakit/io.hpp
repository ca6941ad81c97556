#ifndef SIGMAKIT_IO_HPP
#define SIGMAKIT_IO_HPP

#include <string>

#include "json.hpp"
#include "sigmakit/diag_group.hpp"
#include "sigmakit/ffield.hpp"
#include "sigmakit/solvers.hpp"
#include "sigmakit/zsig_module.hpp"

namespace sigmakit::io {

using Json = nlohmann::ordered_json;

/// `p=5,e=1,t=2:[3,1]`, or a plain integer taken at level 1
TowerElem parse_tower_elem(const std::string& text, FieldTower& tower);

ZSigmaModule module_from_json(const Json& j);
Json module_to_json(const ZSigmaModule& m);

LinDiffEq linear_from_json(const Json& j, FieldTower& tower);
Json linear_to_json(const LinDiffEq& eq, FieldTower& tower);

MultTorsor mult_from_json(const Json& j, FieldTower& tower);
Json mult_to_json(const MultTorsor& t);

Json outcome_to_json(const SolveOutcome& o);
Json group_report_to_json(const GroupReport& r);

}  // namespace sigmakit::io

#endif
