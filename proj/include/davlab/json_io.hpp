#pragma once

#include <string>

#include <json.hpp>

#include "davlab/davenport.hpp"
#include "davlab/group.hpp"
#include "davlab/index2.hpp"
#include "davlab/sequence.hpp"
#include "davlab/witness.hpp"

namespace davlab {

using Json = nlohmann::ordered_json;

/// Cayley table form: {order, table (row-major), labels?}.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {s, m, r, ptype} plus derived invariants on output.
Json params_to_json(const Index2Params& p);
Index2Params params_from_json(const Json& j);

/// Sequence literal: list of [elementLabel, multiplicity] pairs.
Json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const FiniteGroup& g, const Json& j);

Json report_to_json(const DavenportReport& r);
Json witness_to_json(const WitnessRecord& w);
Json bounds_to_json(const BoundsReport& b);

}  // namespace davlab
