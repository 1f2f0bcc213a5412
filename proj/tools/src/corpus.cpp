#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "commands.hpp"
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

namespace fs = std::filesystem;

// Computes the value checked against one expectation key.
using Probe = std::function<json()>;

std::vector<Int> sorted_decorations(const DecoratedCurve& c) {
  std::vector<Int> ls;
  for (std::size_t i = 0; i < c.branch_count(); ++i) ls.push_back(c.l(i));
  std::sort(ls.rbegin(), ls.rend());
  return ls;
}

std::map<std::string, Probe> graph_probes(const WeightedDualGraph& g) {
  return {
      {"rational", [&] { return json(is_rational(g)); }},
      {"multiplicity", [&] { return json(multiplicity(g)); }},
      {"laufer", [&] { return json(to_string(laufer_type(g).tag)); }},
      {"obtainable", [&] { return json(to_string(obtainable_from_base(g).kind)); }},
      {"simple", [&] { return json(is_conjecturally_simple(g)); }},
      {"witness", [&] { return json(to_string(nonsimple_witness(g).kind)); }},
      {"sandwich_obstruction", [&] { return json(sandwich_obstruction(g)); }},
      {"sandwiched", [&] { return json(to_string(is_sandwiched(g).answer)); }},
      {"roots", [&] { return json(positive_roots(g).size()); }},
      {"quadruple_points", [&] { return json(quadruple_point_count(g)); }},
      {"z", [&] { return cycle_json(g, fundamental_cycle(g).z)["coeffs"]; }},
      {"confining", [&] {
         const auto m = find_confining_subgraph(g);
         return m ? json(to_string(m->type)) : json(nullptr);
       }},
      {"star_self_intersections", [&] { return json(star_deformation(g).expected_self_intersections); }},
      {"adjacencies", [&] { return json(enumerate_adjacencies(g).size()); }},
      {"decorations", [&] {
         const auto a = attach_arrows(g);
         return json(sorted_decorations(decorated_curve_of(a, proximity_factorize(a))));
       }},
      {"round_trip", [&] {
         const auto a = attach_arrows(g);
         const auto back = graph_of(decorated_curve_of(a, proximity_factorize(a)));
         return json(back.size() == 1 && is_isomorphic(back[0], g));
       }},
  };
}

Iii4Variant variant_of(const std::string& s) {
  if (s == "E6") return Iii4Variant::E6;
  if (s == "E8") return Iii4Variant::E8;
  if (s == "cusp") return Iii4Variant::Cusp;
  throw ParseError("recipe.variant: expected E6, E8 or cusp");
}

DecoratedCurve recipe_of(const json& r) {
  const std::string kind = r.at("kind").get<std::string>();
  if (kind == "iii3") {
    Iii3Arms arms;
    arms.left = r.value("left", std::vector<int>{});
    arms.short_arm = r.value("short", 0);
    arms.right = r.value("right", std::vector<int>{});
    return recipe_iii3(r.at("k").get<int>(), r.at("s").get<int>(), arms);
  }
  if (kind == "iii4") {
    Iii4Arms arms;
    arms.first = r.value("first", 0);
    arms.second = r.value("second", 0);
    arms.right = r.value("right", std::vector<int>{});
    return recipe_iii4(variant_of(r.at("variant").get<std::string>()), r.at("k").get<int>(), arms);
  }
  throw ParseError("recipe.kind: expected iii3 or iii4");
}

std::map<std::string, Probe> curve_probes(const DecoratedCurve& c) {
  return {
      {"decorations", [&] { return json(sorted_decorations(c)); }},
      {"smooth_branches", [&] {
         std::size_t n = 0;
         for (std::size_t i = 0; i < c.branch_count(); ++i) n += c.is_smooth_branch(i);
         return json(n);
       }},
      {"delta", [&] { return json(c.delta()); }},
      {"components", [&] { return json(graph_of(c).size()); }},
      {"laufer", [&] {
         json tags = json::array();
         for (const auto& g : graph_of(c)) tags.push_back(to_string(laufer_type(g).tag));
         return tags;
       }},
      {"multiplicity", [&] {
         json ms = json::array();
         for (const auto& g : graph_of(c)) ms.push_back(multiplicity(g));
         return ms;
       }},
      {"delta_types", [&] {
         json sets = json::array();
         for (const auto& cand : delta_const_candidates(c)) sets.push_back(cand.singularity_types());
         std::sort(sets.begin(), sets.end());
         sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
         return sets;
       }},
  };
}

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

void check_entry(const std::string& name, const json& expect, const std::map<std::string, Probe>& probes,
                 const std::function<bool(const std::string&, const json&, std::string&)>& special, Tally& t,
                 json& report, const Output& o, std::ostream& out) {
  for (const auto& [key, want] : expect.items()) {
    ++t.checks;
    std::string got_text;
    bool ok = false;
    try {
      if (special(key, want, got_text)) {
        ok = got_text.empty();
      } else {
        auto it = probes.find(key);
        if (it == probes.end()) throw ParseError("unknown expectation key '" + key + "'");
        const json got = it->second();
        ok = got == want;
        got_text = got.dump();
      }
    } catch (const Error& e) {
      got_text = std::string("error: ") + e.what();
    }
    if (!ok) ++t.failures;
    report.push_back({{"entry", name}, {"key", key}, {"pass", ok}, {"expected", want}, {"got", got_text}});
    if (!o.json) {
      out << (ok ? "PASS " : "FAIL ") << name << ' ' << key;
      if (!ok) out << ": expected " << want.dump() << ", got " << got_text;
      out << '\n';
    }
  }
}

}  // namespace

int run_corpus_verify(const std::string& dir_arg, const Output& o, std::ostream& out) {
  const fs::path dir(dir_arg);
  const json manifest = json::parse(read_text_file((dir / "manifest.json").string()));
  Tally t;
  json report = json::array();
  for (const auto& entry : manifest.value("graphs", json::array())) {
    const std::string name = entry.at("name");
    const auto g = read_graph_file((dir / entry.at("file").get<std::string>()).string());
    const auto probes = graph_probes(g);
    check_entry(name, entry.at("expect"), probes, [](const std::string&, const json&, std::string&) { return false; },
                t, report, o, out);
  }
  for (const auto& entry : manifest.value("curves", json::array())) {
    const std::string name = entry.at("name");
    const auto c = entry.contains("recipe") ? recipe_of(entry["recipe"])
                                            : read_decorated_curve_file((dir / entry.at("file").get<std::string>()).string());
    const auto probes = curve_probes(c);
    // "graph" names a graph file, compared up to isomorphism
    auto special = [&](const std::string& key, const json& want, std::string& got) {
      if (key != "graph") return false;
      const auto expected = read_graph_file((dir / want.get<std::string>()).string());
      const auto graphs = graph_of(c);
      if (graphs.size() != 1 || !is_isomorphic(graphs[0], expected)) {
        got = graphs.size() == 1 ? describe(graphs[0]) : std::to_string(graphs.size()) + " components";
      }
      return true;
    };
    check_entry(name, entry.at("expect"), probes, special, t, report, o, out);
  }
  if (o.json)
    out << json({{"checks", t.checks}, {"failures", t.failures}, {"results", report}}).dump(2) << '\n';
  else
    out << t.checks - t.failures << '/' << t.checks << " corpus checks passed\n";
  return t.failures == 0 ? 0 : 1;
}

}  // namespace singraph::cli
