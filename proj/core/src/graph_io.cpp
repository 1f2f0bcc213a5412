#include "singraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace singraph {

using nlohmann::json;

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + line_of(text, e.byte) + ": " + e.what());
  }
}

Int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer");
  return j.get<Int>();
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError(field + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

WeightedDualGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("vertices: expected an array");
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    const std::string field = "vertices[" + std::to_string(i) + "]";
    if (!v.is_object()) throw ParseError(field + ": expected an object");
    if (!v.contains("id")) throw ParseError(field + ".id: missing");
    if (!v.contains("weight")) throw ParseError(field + ".weight: missing");
    if (v.contains("genus") && as_int(v["genus"], field + ".genus") != 0)
      throw ParseError(field + ".genus: only rational (genus 0) curves are supported");
    vs.push_back({as_string(v["id"], field + ".id"), as_int(v["weight"], field + ".weight")});
  }
  std::vector<EdgeSpec> es;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string field = "edges[" + std::to_string(i) + "]";
      if (e.is_array()) {
        if (e.size() != 2 && e.size() != 3) throw ParseError(field + ": expected [a, b] or [a, b, mult]");
        es.push_back({as_string(e[0], field + "[0]"), as_string(e[1], field + "[1]"),
                      e.size() == 3 ? as_int(e[2], field + "[2]") : 1});
      } else if (e.is_object()) {
        if (!e.contains("a") || !e.contains("b")) throw ParseError(field + ": expected keys a and b");
        es.push_back({as_string(e["a"], field + ".a"), as_string(e["b"], field + ".b"),
                      e.contains("mult") ? as_int(e["mult"], field + ".mult") : 1});
      } else {
        throw ParseError(field + ": expected an array or object");
      }
    }
  }
  try {
    return WeightedDualGraph(std::move(vs), std::move(es));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedDualGraph read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string graph_to_json(const WeightedDualGraph& g, int indent) {
  json doc;
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < g.size(); ++v) doc["vertices"].push_back({{"id", g.id(v)}, {"weight", g.weight(v)}});
  doc["edges"] = json::array();
  for (const auto& e : g.edge_specs()) {
    if (e.mult == 1)
      doc["edges"].push_back({e.a, e.b});
    else
      doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"mult", e.mult}});
  }
  return doc.dump(indent);
}

Cycle parse_cycle(const WeightedDualGraph& g, std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_object())
    throw ParseError("coeffs: expected an object");
  std::vector<Int> c(g.size(), 0);
  for (const auto& [key, value] : doc["coeffs"].items()) {
    const auto v = g.find(key);
    if (!v) throw ParseError("coeffs." + key + ": unknown vertex");
    const Int x = as_int(value, "coeffs." + key);
    if (x < 0) throw ParseError("coeffs." + key + ": negative coefficient");
    c[*v] = x;
  }
  return Cycle(std::move(c));
}

std::string cycle_to_json(const WeightedDualGraph& g, const Cycle& c) {
  json doc;
  doc["coeffs"] = json::object();
  for (std::size_t v = 0; v < g.size(); ++v)
    if (c[v] != 0) doc["coeffs"][g.id(v)] = c[v];
  return doc.dump();
}

std::string graph_to_dot(const WeightedDualGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    out << "  \"" << g.id(v) << "\" [label=\"" << g.weight(v) << "\"];\n";
  for (const auto& e : g.edge_specs()) {
    out << "  \"" << e.a << "\" -- \"" << e.b << "\"";
    if (e.mult != 1) out << " [label=\"" << e.mult << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace singraph
