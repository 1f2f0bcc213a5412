#include "commands.hpp"

#include <algorithm>

#include "report.hpp"
#include "singraph/canonical.hpp"
#include "singraph/classify.hpp"
#include "singraph/cycle_algebra.hpp"
#include "singraph/delta_const.hpp"
#include "singraph/deform.hpp"
#include "singraph/graph_io.hpp"
#include "singraph/sandwich.hpp"

namespace singraph::cli {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

bool dot_only(const WeightedDualGraph& g, const Output& o, std::ostream& out) {
  if (!o.dot) return false;
  out << graph_to_dot(g);
  return true;
}

std::string summary(const WeightedDualGraph& g, bool rational, bool simple) {
  std::string head;
  if (!rational)
    head = "not rational";
  else if (is_rdp(g))
    head = "rational double point";
  else if (is_rtp(g))
    head = "rational triple point";
  else
    head = "rational singularity of multiplicity " + std::to_string(multiplicity(g));
  return head + (simple ? "; simple" : "; not simple");
}

json slots_json(const WeightedDualGraph& g, const SlotAssignment& slots) {
  json out = json::object();
  for (const auto& [name, v] : slots) out[name] = g.id(v);
  return out;
}

json witness_json(const WeightedDualGraph& g, const NonsimpleWitness& w) {
  json out = {{"kind", to_string(w.kind)}};
  switch (w.kind) {
    case NonsimpleWitness::Kind::HighValencyStar:
      out["vertex"] = g.id(w.vertex);
      break;
    case NonsimpleWitness::Kind::TwoTripleMerge: {
      json path = json::array();
      for (std::size_t v : w.path) path.push_back(g.id(v));
      out["path"] = path;
      break;
    }
    case NonsimpleWitness::Kind::ConfiningSubgraph: {
      out["type"] = to_string(w.confining->type);
      out["center"] = g.id(w.confining->center);
      json arms = json::array();
      for (const auto& arm : w.confining->arms) {
        json a = json::array();
        for (std::size_t v : arm) a.push_back(g.id(v));
        arms.push_back(a);
      }
      out["arms"] = arms;
      break;
    }
  }
  return out;
}

std::string witness_text(const WeightedDualGraph& g, const NonsimpleWitness& w) {
  std::string s = to_string(w.kind);
  switch (w.kind) {
    case NonsimpleWitness::Kind::HighValencyStar:
      return s + " at " + g.id(w.vertex);
    case NonsimpleWitness::Kind::TwoTripleMerge: {
      s += " along";
      for (std::size_t v : w.path) s += " " + g.id(v);
      return s;
    }
    case NonsimpleWitness::Kind::ConfiningSubgraph:
      return s + " " + to_string(w.confining->type) + " centred at " + g.id(w.confining->center);
  }
  return s;
}

}  // namespace

int run_classify(const std::string& path, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (dot_only(g, o, out)) return 0;
  if (!g.is_minimal()) throw GraphError("classify expects a minimal graph (all weights <= -2)");
  const bool rational = is_rational(g);
  const auto laufer = laufer_type(g);
  json j = {{"rational", rational}, {"laufer_type", to_string(laufer.tag)},
            {"laufer_slots", slots_json(g, laufer.witness)}};
  bool simple = false;
  ObtainableVerdict verdict;
  std::optional<NonsimpleWitness> witness;
  if (rational) {
    j["multiplicity"] = multiplicity(g);
    verdict = obtainable_from_base(g);
    simple = verdict.kind != BaseKind::None;
    j["obtainable"] = to_string(verdict.kind);
    j["base_weights"] = verdict.base_weights;
    j["sandwich_obstruction"] = sandwich_obstruction(g);
    if (!simple) witness = nonsimple_witness(g);
  }
  j["simple"] = simple;
  j["summary"] = summary(g, rational, simple);
  if (witness) j["witness"] = witness_json(g, *witness);
  if (o.json) {
    emit(out, j);
    return 0;
  }
  out << j["summary"].get<std::string>() << '\n';
  out << "rational: " << (rational ? "yes" : "no") << '\n';
  if (rational) out << "multiplicity: " << j["multiplicity"].get<Int>() << '\n';
  out << "laufer type: " << to_string(laufer.tag) << '\n';
  if (rational) {
    out << "obtainable: " << to_string(verdict.kind);
    if (verdict.kind != BaseKind::None) {
      out << " from";
      for (std::size_t v = 0; v < g.size(); ++v) out << ' ' << g.id(v) << ':' << verdict.base_weights[v];
    }
    out << '\n';
    out << "sandwich obstruction: " << (j["sandwich_obstruction"].get<bool>() ? "yes" : "no") << '\n';
  }
  out << "simple: " << (simple ? "yes" : "no") << '\n';
  if (witness) out << "witness: " << witness_text(g, *witness) << '\n';
  return 0;
}

int run_zcycle(const std::string& path, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (dot_only(g, o, out)) return 0;
  const auto fc = fundamental_cycle(g);
  const bool rational = arithmetic_genus(g, fc.z) == 0;
  if (o.json) {
    json seq = json::array();
    for (std::size_t v : fc.sequence) seq.push_back(g.id(v));
    json j = {{"z", cycle_json(g, fc.z)}, {"sequence", seq}, {"z_squared", dot(g, fc.z, fc.z)},
              {"arithmetic_genus", arithmetic_genus(g, fc.z)}, {"rational", rational}};
    emit(out, j);
    return 0;
  }
  out << "Z = " << describe(g, fc.z) << '\n';
  out << "Z.Z = " << dot(g, fc.z, fc.z) << ", p_a(Z) = " << arithmetic_genus(g, fc.z) << '\n';
  out << "computation sequence:";
  for (std::size_t v : fc.sequence) out << ' ' << g.id(v);
  out << '\n';
  return 0;
}

int run_roots(const std::string& path, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (dot_only(g, o, out)) return 0;
  const auto roots = positive_roots(g);
  if (o.json) {
    json rs = json::array();
    for (const auto& d : roots) rs.push_back(cycle_json(g, d));
    emit(out, {{"count", roots.size()}, {"roots", rs}});
    return 0;
  }
  out << roots.size() << " positive roots\n";
  for (const auto& d : roots) out << "  " << describe(g, d) << "  (D.D = " << dot(g, d, d) << ")\n";
  return 0;
}

int run_adjacencies(const std::string& path, std::size_t max_m, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  const auto adj = enumerate_adjacencies(g, max_m);
  if (o.dot) {
    for (std::size_t i = 0; i < adj.size(); ++i)
      if (!adj[i].graph.empty()) out << graph_to_dot(adj[i].graph, "A" + std::to_string(i));
    return 0;
  }
  if (o.json) {
    json list = json::array();
    for (const auto& a : adj)
      list.push_back({{"graph", graph_json(a.graph)}, {"collection", collection_json(g, a.witness)}});
    emit(out, {{"count", adj.size()}, {"adjacencies", list}});
    return 0;
  }
  out << adj.size() << " adjacencies\n";
  for (const auto& a : adj) {
    out << "  " << describe(a.graph) << '\n';
    for (const auto& d : a.witness.roots) out << "      D = " << describe(g, d) << '\n';
  }
  return 0;
}

int run_star(const std::string& path, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (dot_only(g, o, out)) return 0;
  const auto sd = star_deformation(g);
  const auto star = collection_graph(g, sd.collection);
  if (o.json) {
    emit(out, {{"type", to_string(sd.match.type)},
               {"collection", collection_json(g, sd.collection)},
               {"self_intersections", sd.expected_self_intersections},
               {"star", graph_json(star)}});
    return 0;
  }
  out << to_string(sd.match.type) << " subgraph centred at " << g.id(sd.match.center) << '\n';
  for (std::size_t i = 0; i < sd.collection.size(); ++i) {
    const auto& d = sd.collection.roots[i];
    out << "  D" << i << " = " << describe(g, d) << "  (D" << i << "^2 = " << dot(g, d, d) << ")\n";
  }
  std::vector<Int> leaves;
  for (std::size_t v = 1; v < star.size(); ++v) leaves.push_back(star.weight(v));
  out << "star: centre " << star.weight(0) << ", leaves";
  for (Int w : leaves) out << ' ' << w;
  out << '\n';
  return 0;
}

int run_blowup_profile(const std::string& path, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  if (dot_only(g, o, out)) return 0;
  const auto profile = resolution_profile(g);
  const auto quads = static_cast<std::size_t>(
      std::count_if(profile.begin(), profile.end(), [](const ProfileEntry& e) { return e.multiplicity == 4; }));
  if (o.json) {
    json entries = json::array();
    for (const auto& e : profile) entries.push_back({{"multiplicity", e.multiplicity}, {"depth", e.depth}});
    emit(out, {{"profile", entries}, {"quadruple_points", quads}});
    return 0;
  }
  for (const auto& e : profile) out << std::string(2 * e.depth, ' ') << "multiplicity " << e.multiplicity << '\n';
  out << "quadruple points: " << quads << '\n';
  return 0;
}

int run_sandwich_build(const std::string& path, const std::optional<std::string>& e0, const Output& o,
                       std::ostream& out) {
  const auto g = read_graph_file(path);
  std::optional<std::size_t> start;
  if (e0) start = g.index_of(*e0);
  const auto aug = attach_arrows(g, start);
  if (dot_only(aug.graph, o, out)) return 0;
  const auto p = proximity_factorize(aug);
  const auto curve = decorated_curve_of(aug, p);
  if (o.json) {
    emit(out, curve_json(curve));
    return 0;
  }
  out << describe(curve);
  return 0;
}

int run_sandwich_graph(const std::string& path, const Output& o, std::ostream& out) {
  const auto curve = read_decorated_curve_file(path);
  const auto graphs = graph_of(curve);
  if (o.dot) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out << graph_to_dot(graphs[i], "X" + std::to_string(i));
    return 0;
  }
  if (o.json) {
    json list = json::array();
    for (const auto& g : graphs) list.push_back(graph_json(g));
    emit(out, {{"components", list}});
    return 0;
  }
  if (graphs.empty()) out << "smooth\n";
  for (const auto& g : graphs) out << describe(g) << '\n';
  return 0;
}

int run_sandwich_deform(const std::string& path, std::size_t depth, const Output& o, std::ostream& out) {
  const auto curve = read_decorated_curve_file(path);
  const auto cands = delta_const_candidates(curve, depth);
  if (o.json) {
    json list = json::array();
    for (const auto& c : cands) {
      json germs = json::array();
      for (const auto& germ : c.germs) germs.push_back(curve_json(germ));
      list.push_back({{"types", c.singularity_types()}, {"germs", germs}});
    }
    emit(out, {{"kind", "combinatorial"}, {"candidates", list}});
    return 0;
  }
  out << cands.size() << " combinatorial candidates (realisability not decided)\n";
  for (const auto& c : cands) {
    out << " ";
    if (c.germs.empty()) out << " smooth";
    for (const auto& germ : c.germs) {
      out << ' ' << germ_type(germ) << '(';
      for (std::size_t i = 0; i < germ.branch_count(); ++i) out << (i ? "," : "") << germ.l(i);
      out << ')';
    }
    out << '\n';
  }
  return 0;
}

int run_sandwich_check(const std::string& path, long budget, const Output& o, std::ostream& out) {
  const auto g = read_graph_file(path);
  const auto v = is_sandwiched(g, budget);
  if (o.dot) {
    if (v.witness) out << graph_to_dot(v.witness->graph);
    return 0;
  }
  if (o.json) {
    json j = {{"sandwiched", to_string(v.answer)}, {"reason", v.reason}};
    if (v.witness) j["augmented"] = graph_json(v.witness->graph);
    emit(out, j);
    return 0;
  }
  out << "sandwiched: " << to_string(v.answer) << " (" << v.reason << ")\n";
  if (v.witness) out << "augmented graph: " << describe(v.witness->graph) << '\n';
  return 0;
}

}  // namespace singraph::cli
