#pragma once

// Text and JSON renderings shared by the subcommands and the corpus runner.

#include <string>
#include <vector>

#include "json.hpp"
#include "singraph/cluster.hpp"
#include "singraph/deform.hpp"
#include "singraph/graph.hpp"

namespace singraph::cli {

using nlohmann::json;

/// "[-4,-2,-3]" for a chain, otherwise "v1:-2 v2:-3 | v1-v2 ...".
std::string describe(const WeightedDualGraph& g);
std::string describe(const WeightedDualGraph& g, const Cycle& c);
/// Chain weights read from one end, the end with the smaller id first;
/// empty when g is not a chain.
std::vector<Int> chain_weights(const WeightedDualGraph& g);

json graph_json(const WeightedDualGraph& g);
json cycle_json(const WeightedDualGraph& g, const Cycle& c);
json curve_json(const DecoratedCurve& c);
json collection_json(const WeightedDualGraph& g, const RootCollection& col);

/// Sorted decorations and basic invariants of a decorated curve.
std::string describe(const DecoratedCurve& c);

}  // namespace singraph::cli
