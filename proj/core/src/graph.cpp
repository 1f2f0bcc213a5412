#include "singraph/graph.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <numeric>
#include <set>

namespace singraph {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw GuardExceeded("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw GuardExceeded("integer overflow in multiplication");
  return r;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      // compare digit runs by value, ignoring leading zeros
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const std::size_t la = ie - is, lb = je - js;
      if (la != lb) return la < lb;
      const int c = a.substr(is, la).compare(b.substr(js, lb));
      if (c != 0) return c < 0;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

WeightedDualGraph::WeightedDualGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end(),
            [](const VertexSpec& x, const VertexSpec& y) { return natural_less(x.id, y.id); });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id.empty()) throw GraphError("vertex with empty id");
    if (i > 0 && vertices[i].id == vertices[i - 1].id)
      throw GraphError("duplicate vertex id '" + vertices[i].id + "'");
    if (vertices[i].weight > -1)
      throw GraphError("vertex '" + vertices[i].id + "' has weight " + std::to_string(vertices[i].weight) +
                       "; exceptional curves need weight <= -1");
  }
  const std::size_t n = vertices.size();
  ids_.reserve(n);
  weights_.reserve(n);
  for (auto& v : vertices) {
    ids_.push_back(std::move(v.id));
    weights_.push_back(v.weight);
  }
  adj_.assign(n * n, 0);
  for (const auto& e : edges) {
    const auto a = find(e.a);
    const auto b = find(e.b);
    if (!a) throw GraphError("edge refers to unknown vertex '" + e.a + "'");
    if (!b) throw GraphError("edge refers to unknown vertex '" + e.b + "'");
    if (*a == *b) throw GraphError("self-loop at vertex '" + e.a + "'");
    if (e.mult <= 0) throw GraphError("edge " + e.a + "-" + e.b + " has non-positive multiplicity");
    adj_[*a * n + *b] = checked_add(adj_[*a * n + *b], e.mult);
    adj_[*b * n + *a] = adj_[*a * n + *b];
  }
}

std::optional<std::size_t> WeightedDualGraph::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const std::string& x, std::string_view y) { return natural_less(x, y); });
  if (it != ids_.end() && *it == id) return static_cast<std::size_t>(it - ids_.begin());
  return std::nullopt;
}

std::size_t WeightedDualGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw GraphError("no vertex with id '" + std::string(id) + "'");
}

std::vector<std::size_t> WeightedDualGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (u != v && mult(u, v) > 0) out.push_back(u);
  return out;
}

std::size_t WeightedDualGraph::valency(std::size_t v) const {
  Int total = 0;
  for (std::size_t u = 0; u < size(); ++u)
    if (u != v) total += mult(u, v);
  return static_cast<std::size_t>(total);
}

bool WeightedDualGraph::is_minimal() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Int w) { return w <= -2; });
}

bool WeightedDualGraph::is_connected() const {
  return size() <= 1 || connected_components(*this).size() == 1;
}

bool WeightedDualGraph::is_tree() const {
  if (!is_connected()) return false;
  std::size_t edges = 0;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (mult(u, v) > 0) ++edges;
  return edges + 1 == size() || size() == 0;
}

std::vector<VertexSpec> WeightedDualGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  for (std::size_t v = 0; v < size(); ++v) out.push_back({ids_[v], weights_[v]});
  return out;
}

std::vector<EdgeSpec> WeightedDualGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (mult(u, v) > 0) out.push_back({ids_[u], ids_[v], mult(u, v)});
  return out;
}

WeightedDualGraph WeightedDualGraph::with_weights(std::vector<Int> weights) const {
  if (weights.size() != size()) throw GraphError("weight vector has wrong length");
  auto specs = vertex_specs();
  for (std::size_t v = 0; v < size(); ++v) specs[v].weight = weights[v];
  return WeightedDualGraph(std::move(specs), edge_specs());
}

std::string WeightedDualGraph::fresh_id(std::string_view stem) const {
  for (std::size_t k = size() + 1;; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (!find(candidate)) return candidate;
  }
}

Cycle::Cycle(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  for (Int c : coeffs_)
    if (c < 0) throw GraphError("cycle coefficients must be non-negative");
}

Cycle Cycle::unit(std::size_t n, std::size_t v) {
  Cycle c(n);
  c.coeffs_.at(v) = 1;
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

bool Cycle::is_reduced() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c <= 1; });
}

Cycle Cycle::reduced() const {
  Cycle r(size());
  for (std::size_t v = 0; v < size(); ++v) r.coeffs_[v] = std::min<Int>(coeffs_[v], 1);
  return r;
}

std::vector<std::size_t> Cycle::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (coeffs_[v] > 0) out.push_back(v);
  return out;
}

Cycle& Cycle::operator+=(const Cycle& other) {
  if (other.size() != size()) throw GraphError("cycles live on different graphs");
  for (std::size_t v = 0; v < size(); ++v) coeffs_[v] = checked_add(coeffs_[v], other.coeffs_[v]);
  return *this;
}

Cycle Cycle::operator+(const Cycle& other) const {
  Cycle r = *this;
  r += other;
  return r;
}

Cycle Cycle::operator-(const Cycle& other) const {
  if (other.size() != size()) throw GraphError("cycles live on different graphs");
  std::vector<Int> out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    out[v] = coeffs_[v] - other.coeffs_[v];
    if (out[v] < 0) throw GraphError("cycle difference has a negative coefficient");
  }
  return Cycle(std::move(out));
}

Cycle Cycle::with(std::size_t v, Int value) const {
  auto c = coeffs_;
  c.at(v) = value;
  return Cycle(std::move(c));
}

bool Cycle::leq(const Cycle& other) const {
  if (other.size() != size()) throw GraphError("cycles live on different graphs");
  for (std::size_t v = 0; v < size(); ++v)
    if (coeffs_[v] > other.coeffs_[v]) return false;
  return true;
}

namespace {

void require_on(const WeightedDualGraph& g, const Cycle& c) {
  if (c.size() != g.size())
    throw GraphError("cycle has " + std::to_string(c.size()) + " coefficients but the graph has " +
                     std::to_string(g.size()) + " vertices");
}

}  // namespace

Int dot_vertex(const WeightedDualGraph& g, std::size_t v, const Cycle& d) {
  require_on(g, d);
  Int s = 0;
  for (std::size_t u = 0; u < g.size(); ++u)
    if (d[u] != 0) s = checked_add(s, checked_mul(d[u], g.form(v, u)));
  return s;
}

Int dot(const WeightedDualGraph& g, const Cycle& c, const Cycle& d) {
  require_on(g, c);
  require_on(g, d);
  Int s = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (c[v] != 0) s = checked_add(s, checked_mul(c[v], dot_vertex(g, v, d)));
  return s;
}

Int canonical_dot(const WeightedDualGraph& g, const Cycle& d) {
  require_on(g, d);
  Int s = 0;
  for (std::size_t v = 0; v < g.size(); ++v) s = checked_add(s, checked_mul(d[v], -g.weight(v) - 2));
  return s;
}

Int arithmetic_genus(const WeightedDualGraph& g, const Cycle& d) {
  require_on(g, d);
  if (d.is_zero()) throw GraphError("arithmetic genus needs a positive cycle");
  const Int twice = checked_add(dot(g, d, d), canonical_dot(g, d));
  if (twice % 2 != 0) throw GraphError("D.(D+K) is odd; the intersection data is inconsistent");
  return 1 + twice / 2;
}

namespace {

using Big = boost::multiprecision::cpp_int;

template <class T>
bool bareiss_positive_minors(std::vector<T> a, std::size_t n) {
  T prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return true;
}

// Int64 attempt; returns nullopt when an intermediate value overflows.
std::optional<bool> bareiss_fast(std::vector<Int> a, std::size_t n) {
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int x, y, z;
        if (__builtin_mul_overflow(a[i * n + j], a[k * n + k], &x)) return std::nullopt;
        if (__builtin_mul_overflow(a[i * n + k], a[k * n + j], &y)) return std::nullopt;
        if (__builtin_sub_overflow(x, y, &z)) return std::nullopt;
        a[i * n + j] = z / prev;
      }
    prev = a[k * n + k];
  }
  return true;
}

}  // namespace

bool is_negative_definite(std::span<const Int> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw GraphError("matrix has wrong size");
  std::vector<Int> neg(n * n);
  for (std::size_t i = 0; i < n * n; ++i) neg[i] = -matrix[i];
  if (auto r = bareiss_fast(neg, n)) return *r;
  std::vector<Big> big(neg.begin(), neg.end());
  return bareiss_positive_minors(std::move(big), n);
}

bool is_negative_definite(const WeightedDualGraph& g) {
  const std::size_t n = g.size();
  std::vector<Int> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = g.form(i, j);
  return is_negative_definite(m, n);
}

WeightedDualGraph blow_up_smooth_point(const WeightedDualGraph& g, std::size_t v) {
  if (v >= g.size()) throw GraphError("vertex index out of range");
  auto vs = g.vertex_specs();
  auto es = g.edge_specs();
  const std::string fresh = g.fresh_id();
  vs[v].weight -= 1;
  vs.push_back({fresh, -1});
  es.push_back({g.id(v), fresh, 1});
  return WeightedDualGraph(std::move(vs), std::move(es));
}

WeightedDualGraph contract(const WeightedDualGraph& g, std::size_t v) {
  if (v >= g.size()) throw GraphError("vertex index out of range");
  if (g.weight(v) != -1)
    throw GraphError("cannot contract vertex '" + g.id(v) + "' of weight " + std::to_string(g.weight(v)));
  const auto nb = g.neighbors(v);
  std::vector<VertexSpec> vs;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    const Int m = g.mult(u, v);
    vs.push_back({g.id(u), checked_add(g.weight(u), checked_mul(m, m))});
  }
  std::vector<EdgeSpec> es;
  for (auto& e : g.edge_specs())
    if (e.a != g.id(v) && e.b != g.id(v)) es.push_back(e);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      es.push_back({g.id(nb[i]), g.id(nb[j]), checked_mul(g.mult(nb[i], v), g.mult(nb[j], v))});
  return WeightedDualGraph(std::move(vs), std::move(es));
}

WeightedDualGraph merge_chain(const WeightedDualGraph& g, std::span<const std::size_t> path) {
  if (path.empty()) throw GraphError("merge_chain needs a non-empty path");
  std::set<std::size_t> on_path(path.begin(), path.end());
  if (on_path.size() != path.size()) throw GraphError("merge_chain path repeats a vertex");
  for (std::size_t v : path)
    if (v >= g.size()) throw GraphError("vertex index out of range");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (g.mult(path[i], path[i + 1]) == 0)
      throw GraphError("vertices '" + g.id(path[i]) + "' and '" + g.id(path[i + 1]) + "' are not adjacent");
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 2; j < path.size(); ++j)
      if (g.mult(path[i], path[j]) > 0) throw GraphError("merge_chain path is not a chain");
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (g.neighbors(path[i]).size() != 2)
      throw GraphError("internal chain vertex '" + g.id(path[i]) + "' does not have valency 2");

  Int weight = 0;
  for (std::size_t v : path) weight = checked_add(weight, g.weight(v));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) weight = checked_add(weight, 2 * g.mult(path[i], path[i + 1]));
  if (weight > -1) throw GraphError("merged curve would have non-negative self-intersection");

  const std::string merged = g.id(path.front());
  std::vector<VertexSpec> vs{{merged, weight}};
  for (std::size_t u = 0; u < g.size(); ++u)
    if (!on_path.count(u)) vs.push_back({g.id(u), g.weight(u)});
  std::vector<EdgeSpec> es;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (on_path.count(u)) continue;
    Int m = 0;
    for (std::size_t v : path) m += g.mult(u, v);
    if (m > 0) es.push_back({merged, g.id(u), m});
    for (std::size_t w = u + 1; w < g.size(); ++w)
      if (!on_path.count(w) && g.mult(u, w) > 0) es.push_back({g.id(u), g.id(w), g.mult(u, w)});
  }
  return WeightedDualGraph(std::move(vs), std::move(es));
}

WeightedDualGraph subgraph(const WeightedDualGraph& g, std::span<const std::size_t> vertices) {
  std::set<std::size_t> keep(vertices.begin(), vertices.end());
  std::vector<VertexSpec> vs;
  for (std::size_t v : keep) {
    if (v >= g.size()) throw GraphError("vertex index out of range");
    vs.push_back({g.id(v), g.weight(v)});
  }
  std::vector<EdgeSpec> es;
  for (std::size_t u : keep)
    for (std::size_t v : keep)
      if (u < v && g.mult(u, v) > 0) es.push_back({g.id(u), g.id(v), g.mult(u, v)});
  return WeightedDualGraph(std::move(vs), std::move(es));
}

std::size_t valency(const WeightedDualGraph& g, std::size_t v) { return g.valency(v); }

std::size_t ends(const WeightedDualGraph& g) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.valency(v) == 1) ++count;
  return count;
}

std::vector<std::vector<std::size_t>> connected_components(const WeightedDualGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && comp[u] < 0 && g.mult(u, v) > 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<WeightedDualGraph> component_graphs(const WeightedDualGraph& g) {
  std::vector<WeightedDualGraph> out;
  for (const auto& c : connected_components(g)) out.push_back(subgraph(g, c));
  return out;
}

std::vector<std::size_t> tree_path(const WeightedDualGraph& g, std::size_t from, std::size_t to) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : g.neighbors(v))
      if (parent[u] == n) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  if (parent[to] == n) throw GraphError("vertices are not connected");
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

WeightedDualGraph make_chain(std::span<const Int> weights) {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({"v" + std::to_string(i + 1), weights[i]});
    if (i > 0) es.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), 1});
  }
  return WeightedDualGraph(std::move(vs), std::move(es));
}

WeightedDualGraph make_chain(std::initializer_list<Int> weights) {
  return make_chain(std::span<const Int>(weights.begin(), weights.size()));
}

}  // namespace singraph
