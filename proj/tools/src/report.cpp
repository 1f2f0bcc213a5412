#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "singraph/graph_io.hpp"

namespace singraph::cli {

std::vector<Int> chain_weights(const WeightedDualGraph& g) {
  if (g.empty() || !g.is_tree()) return {};
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.valency(v) > 2) return {};
    if (g.valency(v) <= 1) ends.push_back(v);
  }
  std::vector<Int> out;
  for (std::size_t v : tree_path(g, ends.front(), ends.back())) out.push_back(g.weight(v));
  return out;
}

namespace {

std::string join(const std::vector<Int>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ']';
  return out.str();
}

}  // namespace

std::string describe(const WeightedDualGraph& g) {
  if (g.empty()) return "(smooth)";
  if (auto w = chain_weights(g); !w.empty()) return "chain " + join(w);
  std::ostringstream out;
  for (std::size_t v = 0; v < g.size(); ++v) out << (v ? " " : "") << g.id(v) << ':' << g.weight(v);
  out << " |";
  for (const auto& e : g.edge_specs()) {
    out << ' ' << e.a << '-' << e.b;
    if (e.mult != 1) out << 'x' << e.mult;
  }
  return out.str();
}

std::string describe(const WeightedDualGraph& g, const Cycle& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (c[v] == 0) continue;
    out << (first ? "" : " + ");
    if (c[v] != 1) out << c[v];
    out << g.id(v);
    first = false;
  }
  return first ? "0" : out.str();
}

json graph_json(const WeightedDualGraph& g) { return json::parse(graph_to_json(g)); }

json cycle_json(const WeightedDualGraph& g, const Cycle& c) { return json::parse(cycle_to_json(g, c)); }

json curve_json(const DecoratedCurve& c) { return json::parse(decorated_curve_to_json(c)); }

json collection_json(const WeightedDualGraph& g, const RootCollection& col) {
  json out = json::array();
  for (const auto& d : col.roots) out.push_back(cycle_json(g, d));
  return out;
}

std::string describe(const DecoratedCurve& c) {
  std::ostringstream out;
  out << c.branch_count() << " branch" << (c.branch_count() == 1 ? "" : "es") << ", delta " << c.delta() << '\n';
  for (std::size_t i = 0; i < c.branch_count(); ++i) {
    out << "  C" << i + 1 << ": " << (c.is_smooth_branch(i) ? "smooth" : "singular") << ", l = " << c.l(i)
        << ", m = " << c.m(i);
    const auto seq = c.multiplicity_sequence(i);
    if (!seq.empty()) out << ", multiplicities " << join(seq);
    out << '\n';
  }
  for (std::size_t i = 0; i < c.branch_count(); ++i)
    for (std::size_t j = i + 1; j < c.branch_count(); ++j)
      out << "  C" << i + 1 << ".C" << j + 1 << " = " << c.intersection(i, j) << '\n';
  return out.str();
}

}  // namespace singraph::cli
