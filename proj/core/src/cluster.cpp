#include "singraph/cluster.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "singraph/graph_io.hpp"

namespace singraph {

using nlohmann::json;

Cluster::Cluster(std::vector<ClusterPoint> points) : points_(std::move(points)) {
  for (auto& p : points_)
    if (p.parent && std::find(p.proximate_to.begin(), p.proximate_to.end(), *p.parent) == p.proximate_to.end())
      p.proximate_to.insert(p.proximate_to.begin(), *p.parent);
  index();
}

void Cluster::index() {
  const std::size_t n = points_.size();
  parent_.assign(n, std::nullopt);
  prox_.assign(n, {});
  std::map<int, std::size_t> seen;
  std::set<std::pair<std::size_t, std::size_t>> satellite_pairs;
  for (std::size_t p = 0; p < n; ++p) {
    const auto& pt = points_[p];
    const std::string name = "point " + std::to_string(pt.id);
    if (seen.count(pt.id)) throw GraphError(name + " is listed twice");
    if (p == 0 && pt.parent) throw GraphError(name + ": the first point must be the origin (no parent)");
    if (p > 0 && !pt.parent) throw GraphError(name + ": only the first point may lack a parent");
    for (int q : pt.proximate_to) {
      auto it = seen.find(q);
      if (it == seen.end()) throw GraphError(name + " is proximate to " + std::to_string(q) + ", which is not listed before it");
      prox_[p].push_back(it->second);
    }
    if (pt.parent) parent_[p] = seen.at(*pt.parent);
    std::sort(prox_[p].begin(), prox_[p].end());
    if (std::adjacent_find(prox_[p].begin(), prox_[p].end()) != prox_[p].end())
      throw GraphError(name + " lists a proximate point twice");
    if (prox_[p].size() > 2) throw GraphError(name + " is proximate to more than two points");
    if (prox_[p].size() == 2) {
      const std::size_t par = *parent_[p];
      const std::size_t other = prox_[p][0] == par ? prox_[p][1] : prox_[p][0];
      const auto& pp = prox_[par];
      if (std::find(pp.begin(), pp.end(), other) == pp.end())
        throw GraphError(name + " is proximate to a point whose curve does not pass through its parent");
      if (!satellite_pairs.insert({std::min(par, other), std::max(par, other)}).second)
        throw GraphError(name + " repeats an existing satellite point");
    }
    seen.emplace(pt.id, p);
  }
}

std::size_t Cluster::index_of(int id) const {
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (points_[p].id == id) return p;
  throw GraphError("no cluster point " + std::to_string(id));
}

Matrix Cluster::proximity_matrix() const {
  const std::size_t n = size();
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t q = 0; q < n; ++q) {
    m[q][q] = 1;
    for (std::size_t p : prox_[q]) m[q][p] = -1;
  }
  return m;
}

Matrix Cluster::intersection_matrix() const {
  const auto p = proximity_matrix();
  const std::size_t n = size();
  Matrix out(n, std::vector<Int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Int s = 0;
      for (std::size_t q = 0; q < n; ++q) s += p[q][a] * p[q][b];
      out[a][b] = -s;
    }
  return out;
}

WeightedDualGraph Cluster::exceptional_graph() const {
  const auto m = intersection_matrix();
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t a = 0; a < size(); ++a) {
    vs.push_back({"E" + std::to_string(points_[a].id), m[a][a]});
    for (std::size_t b = 0; b < a; ++b)
      if (m[a][b] > 0) es.push_back({vs[b].id, vs[a].id, m[a][b]});
  }
  return WeightedDualGraph(std::move(vs), std::move(es));
}

std::vector<Int> Cluster::branch_multiplicities(std::size_t p) const {
  const std::size_t n = size();
  if (p >= n) throw GraphError("branch attached to a point outside the cluster");
  // back substitution for the upper triangular P^T
  std::vector<Int> m(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    Int v = k == p ? 1 : 0;
    for (std::size_t q = k + 1; q < n; ++q)
      if (std::find(prox_[q].begin(), prox_[q].end(), k) != prox_[q].end()) v += m[q];
    m[k] = v;
  }
  return m;
}

std::vector<std::size_t> Cluster::path_to(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::optional<std::size_t> q = p; q; q = parent_[*q]) out.push_back(*q);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

int next_id(const std::vector<ClusterPoint>& pts) {
  int id = 0;
  for (const auto& p : pts) id = std::max(id, p.id);
  return id + 1;
}

}  // namespace

std::size_t Cluster::add_free(std::optional<std::size_t> parent) {
  ClusterPoint pt{next_id(points_), std::nullopt, {}};
  if (parent) {
    pt.parent = points_.at(*parent).id;
    pt.proximate_to = {*pt.parent};
  }
  points_.push_back(std::move(pt));
  index();
  return size() - 1;
}

std::size_t Cluster::add_satellite(std::size_t parent, std::size_t other) {
  const int pid = points_.at(parent).id;
  points_.push_back({next_id(points_), pid, {pid, points_.at(other).id}});
  index();
  return size() - 1;
}

DecoratedCurve::DecoratedCurve(Cluster cluster, std::vector<CurveBranch> branches)
    : cluster_(std::move(cluster)), branches_(std::move(branches)) {
  for (const auto& b : branches_) mult_.push_back(cluster_.branch_multiplicities(b.attach));
  for (std::size_t i = 0; i < branches_.size(); ++i)
    if (l(i) < m(i))
      throw GraphError("branch " + std::to_string(i + 1) + " has decoration " + std::to_string(l(i)) +
                       " below m = " + std::to_string(m(i)));
}

std::vector<Int> DecoratedCurve::total_multiplicities() const {
  std::vector<Int> e(cluster_.size(), 0);
  for (const auto& m : mult_)
    for (std::size_t p = 0; p < e.size(); ++p) e[p] += m[p];
  return e;
}

std::vector<bool> DecoratedCurve::singular_points() const {
  const auto e = total_multiplicities();
  std::vector<bool> out(e.size());
  for (std::size_t p = 0; p < e.size(); ++p) out[p] = e[p] >= 2;
  return out;
}

Int DecoratedCurve::m(std::size_t i) const {
  const auto sing = singular_points();
  Int s = 0;
  for (std::size_t p = 0; p < sing.size(); ++p)
    if (sing[p]) s += mult_.at(i)[p];
  return s;
}

Int DecoratedCurve::cluster_length(std::size_t i) const {
  Int s = 0;
  for (Int v : mult_.at(i)) s += v;
  return s;
}

Int DecoratedCurve::intersection(std::size_t i, std::size_t j) const {
  Int s = 0;
  for (std::size_t p = 0; p < cluster_.size(); ++p) s += mult_.at(i)[p] * mult_.at(j)[p];
  return s;
}

Int DecoratedCurve::delta() const {
  Int s = 0;
  for (Int e : total_multiplicities()) s += e * (e - 1) / 2;
  return s;
}

bool DecoratedCurve::is_smooth_branch(std::size_t i) const { return mult_.at(i).front() == 1; }

bool DecoratedCurve::is_nonsingular() const {
  return branches_.size() == 1 && is_smooth_branch(0) && branches_[0].l == 0;
}

std::vector<Int> DecoratedCurve::multiplicity_sequence(std::size_t i) const {
  const auto sing = singular_points();
  std::vector<Int> out;
  for (std::size_t p : cluster_.path_to(branches_.at(i).attach))
    if (sing[p]) out.push_back(mult_[i][p]);
  return out;
}

namespace {

std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer");
  return j.get<int>();
}

}  // namespace

DecoratedCurve parse_decorated_curve(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + line_of(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("points: expected an array");
  if (!doc.contains("branches") || !doc["branches"].is_array()) throw ParseError("branches: expected an array");
  std::vector<ClusterPoint> pts;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const auto& p = doc["points"][i];
    const std::string field = "points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("id")) throw ParseError(field + ": expected an object with an id");
    ClusterPoint pt{as_int(p["id"], field + ".id"), std::nullopt, {}};
    if (p.contains("parent") && !p["parent"].is_null()) pt.parent = as_int(p["parent"], field + ".parent");
    if (p.contains("proximate_to")) {
      if (!p["proximate_to"].is_array()) throw ParseError(field + ".proximate_to: expected an array");
      for (std::size_t k = 0; k < p["proximate_to"].size(); ++k)
        pt.proximate_to.push_back(as_int(p["proximate_to"][k], field + ".proximate_to[" + std::to_string(k) + "]"));
    }
    pts.push_back(std::move(pt));
  }
  try {
    Cluster cluster(std::move(pts));
    std::vector<CurveBranch> branches;
    for (std::size_t i = 0; i < doc["branches"].size(); ++i) {
      const auto& b = doc["branches"][i];
      const std::string field = "branches[" + std::to_string(i) + "]";
      if (!b.is_object() || !b.contains("attach") || !b.contains("l"))
        throw ParseError(field + ": expected an object with attach and l");
      std::size_t at = 0;
      try {
        at = cluster.index_of(as_int(b["attach"], field + ".attach"));
      } catch (const GraphError& e) {
        throw ParseError(field + ".attach: " + e.what());
      }
      branches.push_back({at, as_int(b["l"], field + ".l")});
    }
    return DecoratedCurve(std::move(cluster), std::move(branches));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

DecoratedCurve read_decorated_curve_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_decorated_curve(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string decorated_curve_to_json(const DecoratedCurve& c, int indent) {
  json doc = {{"points", json::array()}, {"branches", json::array()}};
  for (const auto& p : c.cluster().points())
    doc["points"].push_back({{"id", p.id}, {"parent", p.parent ? json(*p.parent) : json(nullptr)},
                             {"proximate_to", p.proximate_to}});
  for (const auto& b : c.branches())
    doc["branches"].push_back({{"attach", c.cluster().point(b.attach).id}, {"l", b.l}});
  return doc.dump(indent);
}

}  // namespace singraph
