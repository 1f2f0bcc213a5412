#pragma once

#include <string>
#include <string_view>

#include "singraph/graph.hpp"

namespace singraph {

/// Raised for unreadable input files; the message names the line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Graph file format:
///   {"vertices":[{"id":"v1","weight":-2},...],"edges":[["v1","v2"],...]}
/// An edge may carry a multiplicity as a third element or as an object
/// {"a":"v1","b":"v2","mult":2}. A vertex may declare "genus"; only 0 is accepted.
WeightedDualGraph parse_graph(std::string_view text);
WeightedDualGraph read_graph_file(const std::string& path);
std::string graph_to_json(const WeightedDualGraph& g, int indent = -1);

/// Cycle format: {"coeffs":{"v1":2,...}}; vertices left out have coefficient 0.
Cycle parse_cycle(const WeightedDualGraph& g, std::string_view text);
std::string cycle_to_json(const WeightedDualGraph& g, const Cycle& c);

/// DOT rendering for figures; weights become vertex labels.
std::string graph_to_dot(const WeightedDualGraph& g, std::string_view name = "G");

std::string read_text_file(const std::string& path);

}  // namespace singraph
