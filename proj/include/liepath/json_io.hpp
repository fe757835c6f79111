#pragma once

#include <nlohmann/json_fwd.hpp>

#include "liepath/kw_boundary.hpp"
#include "liepath/shapovalov.hpp"
#include "liepath/special_norms.hpp"
#include "liepath/weightsys.hpp"

// JSON views of the library types. Big integers and rationals are emitted as
// decimal / "p/q" strings so consumers never truncate them.

namespace liepath {

using OrderedJson = nlohmann::ordered_json;

OrderedJson weight_system_json(const WeightSystem& ws);
OrderedJson paths_json(const WeightSystem& ws, const Weight& target);
OrderedJson gram_json(const GramMatrix& gram);
OrderedJson staircase_json(const WeightSystem& ws, const StaircaseParse& parse,
                           const Int& norm);
OrderedJson minuscule_report_json(const WeightSystem& ws,
                                  const MinusculeGramReport& report);
OrderedJson positivity_report_json(const WeightSystem& ws,
                                   const PositivityReport& report);
OrderedJson chi_expansion_json(const ChiExpansion& expansion);

}  // namespace liepath
