#include "singraph/deform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "singraph/canonical.hpp"
#include "singraph/cycle_algebra.hpp"

namespace singraph {

Cycle RootCollection::sum(std::size_t n) const {
  Cycle s(n);
  for (const auto& d : roots) s += d;
  return s;
}

void validate_collection(const WeightedDualGraph& g, const RootCollection& col) {
  for (std::size_t i = 0; i < col.size(); ++i) {
    const auto& d = col.roots[i];
    if (d.size() != g.size()) throw GraphError("collection cycle does not live on this graph");
    if (d.is_zero() || arithmetic_genus(g, d) != 0)
      throw GraphError("collection member " + std::to_string(i) + " is not a positive root");
    for (std::size_t j = i + 1; j < col.size(); ++j)
      if (dot(g, d, col.roots[j]) < 0)
        throw GraphError("collection members " + std::to_string(i) + " and " + std::to_string(j) +
                         " have negative intersection");
  }
  if (!is_almost_reduced(g, col.sum(g.size()))) throw GraphError("collection sum is not almost reduced");
}

namespace {

using RootSet = std::vector<std::size_t>;  // sorted indices into the root list

constexpr std::size_t kMaxDecompositions = 200'000;

// All sets of at most `limit` roots in which d is a non-negative integral
// combination, found by always covering the least vertex of the remainder.
class Decomposer {
 public:
  Decomposer(const std::vector<Cycle>& roots, std::size_t limit) : roots_(roots), limit_(limit) {}

  const std::vector<RootSet>& of(const Cycle& d) {
    if (auto it = memo_.find(d.coeffs()); it != memo_.end()) return it->second;
    std::set<RootSet> found;
    if (d.is_zero()) {
      found.insert({});
    } else {
      const std::size_t v = d.support().front();
      for (std::size_t r = 0; r < roots_.size(); ++r) {
        const auto& c = roots_[r];
        if (c[v] == 0 || !c.leq(d)) continue;
        for (RootSet s : of(d - c)) {
          if (!std::binary_search(s.begin(), s.end(), r)) s.insert(std::lower_bound(s.begin(), s.end(), r), r);
          if (s.size() <= limit_) found.insert(std::move(s));
        }
        if (found.size() > kMaxDecompositions) throw GuardExceeded("too many root decompositions");
      }
    }
    return memo_.emplace(d.coeffs(), std::vector<RootSet>(found.begin(), found.end())).first->second;
  }

 private:
  const std::vector<Cycle>& roots_;
  std::size_t limit_;
  std::map<std::vector<Int>, std::vector<RootSet>> memo_;
};

RootSet merge(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool other_generator_exists(const std::vector<std::vector<RootSet>>& options, std::size_t i, const RootSet& acc,
                            const RootSet& own, std::size_t m) {
  if (i == options.size()) return acc.size() < m || acc != own;
  for (const auto& s : options[i]) {
    RootSet next = merge(acc, s);
    if (next.size() > m) continue;
    if (other_generator_exists(options, i + 1, next, own, m)) return true;
  }
  return false;
}

}  // namespace

bool is_integrally_minimal(const WeightedDualGraph& g, const RootCollection& col, const std::vector<Cycle>& roots) {
  validate_collection(g, col);
  const std::size_t m = col.size();
  if (m == 0) return true;
  RootSet own;
  for (const auto& d : col.roots) {
    auto it = std::find(roots.begin(), roots.end(), d);
    if (it == roots.end()) throw GraphError("collection member is not among the supplied roots");
    own.push_back(static_cast<std::size_t>(it - roots.begin()));
  }
  std::sort(own.begin(), own.end());
  own.erase(std::unique(own.begin(), own.end()), own.end());
  Decomposer dec(roots, m);
  std::vector<std::vector<RootSet>> options;
  for (const auto& d : col.roots) options.push_back(dec.of(d));
  return !other_generator_exists(options, 0, {}, own, m);
}

bool is_integrally_minimal(const WeightedDualGraph& g, const RootCollection& col) {
  return is_integrally_minimal(g, col, positive_roots(g));
}

WeightedDualGraph collection_graph(const WeightedDualGraph& g, const RootCollection& col) {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < col.size(); ++i) {
    const Int w = dot(g, col.roots[i], col.roots[i]);
    if (w > -1) throw GraphError("collection member " + std::to_string(i) + " has self-intersection " + std::to_string(w));
    vs.push_back({"D" + std::to_string(i + 1), w});
  }
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = i + 1; j < col.size(); ++j) {
      const Int e = dot(g, col.roots[i], col.roots[j]);
      if (e < 0) throw GraphError("collection members have negative intersection");
      if (e > 0) es.push_back({vs[i].id, vs[j].id, e});
    }
  WeightedDualGraph out(std::move(vs), std::move(es));
  if (!is_negative_definite(out)) throw GraphError("collection graph is not negative definite");
  return out;
}

StarDeformation star_deformation(const WeightedDualGraph& g) {
  const auto match = find_confining_subgraph(g);
  if (!match) throw GraphError("graph has no subgraph of type ~E6, ~E7 or ~E8");
  const std::size_t n = g.size();
  // E(i, j) is the j-th vertex (from 1) of arm i (from 1), E(0, 0) the centre
  auto E = [&](std::size_t i, std::size_t j) {
    return i == 0 ? match->center : match->arms[i - 1][j - 1];
  };
  auto b = [&](std::size_t i, std::size_t j) { return -g.weight(E(i, j)); };
  auto cyc = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> terms,
                 std::initializer_list<std::pair<std::size_t, std::size_t>> doubled = {}) {
    Cycle c(n);
    for (auto [i, j] : terms) c += Cycle::unit(n, E(i, j));
    for (auto [i, j] : doubled) c += Cycle::unit(n, E(i, j)) + Cycle::unit(n, E(i, j));
    return c;
  };
  StarDeformation out{*match, {}, {}};
  auto& d = out.collection.roots;
  auto& x = out.expected_self_intersections;
  switch (match->type) {
    case ConfiningType::E6:
      d = {cyc({{0, 0}, {1, 1}, {2, 1}, {3, 1}}), cyc({{1, 2}}), cyc({{2, 2}}), cyc({{3, 2}}), cyc({{0, 0}})};
      x = {-(b(1, 1) + b(2, 1) + b(3, 1) - 4), -b(1, 2), -b(2, 2), -b(3, 2), -2};
      break;
    case ConfiningType::E7:
      d = {cyc({{1, 1}, {2, 2}, {2, 1}, {0, 0}, {3, 1}, {3, 2}}), cyc({{0, 0}, {2, 1}}), cyc({{0, 0}, {3, 1}}),
           cyc({{2, 3}}), cyc({{3, 3}})};
      x = {-(b(1, 1) + b(2, 2) + b(3, 2) - 4), -2, -2, -b(2, 3), -b(3, 3)};
      break;
    case ConfiningType::E8:
      d = {cyc({{2, 2}, {2, 1}, {0, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}}), cyc({{1, 1}, {0, 0}, {2, 1}}),
           cyc({{1, 1}, {0, 0}, {3, 1}, {3, 2}, {3, 3}}), cyc({{1, 1}, {2, 1}, {3, 2}}, {{0, 0}, {3, 1}}),
           cyc({{3, 5}})};
      x = {-(b(2, 2) + b(3, 4) - 2), -2, -2, -2, -b(3, 5)};
      break;
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (arithmetic_genus(g, d[i]) != 0) throw Error("star collection member is not a positive root");
    if (dot(g, d[i], d[i]) != x[i]) throw Error("star collection self-intersection differs from the lemma");
    for (std::size_t j = i + 1; j < 5; ++j)
      if (dot(g, d[i], d[j]) != (i == 0 ? 1 : 0)) throw Error("star collection is not a star");
  }
  return out;
}

namespace {

struct AdjacencySearch {
  const WeightedDualGraph& g;
  const std::vector<Cycle>& roots;
  Cycle z;
  std::size_t max_m;
  std::vector<std::vector<Int>> pair_dot;
  std::map<std::string, Adjacency> found;
  std::vector<std::size_t> chosen;

  // Blocks of the incidence graph D_i.D_j > 0 among the chosen roots.
  std::vector<std::vector<std::size_t>> blocks() const {
    const std::size_t m = chosen.size();
    std::vector<std::size_t> label(m, m);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < m; ++s) {
      if (label[s] != m) continue;
      out.push_back({s});
      label[s] = out.size() - 1;
      for (std::size_t k = 0; k < out.back().size(); ++k)
        for (std::size_t t = 0; t < m; ++t)
          if (label[t] == m && pair_dot[chosen[out.back()[k]]][chosen[t]] > 0) {
            label[t] = out.size() - 1;
            out.back().push_back(t);
          }
    }
    return out;
  }

  void record() {
    const auto parts = blocks();
    for (const auto& part : parts) {
      Cycle s(g.size());
      for (std::size_t i : part) s += roots[chosen[i]];
      if (arithmetic_genus(g, s) != 0) return;
    }
    RootCollection col;
    for (std::size_t r : chosen) col.roots.push_back(roots[r]);
    if (!is_integrally_minimal(g, col, roots)) return;
    for (const auto& part : parts) {
      RootCollection witness;
      for (std::size_t i : part) witness.roots.push_back(col.roots[i]);
      auto graph = collection_graph(g, witness);
      if (!graph.is_tree() && graph.size() > 12)
        throw GuardExceeded("non-tree adjacency graph with more than 12 vertices");
      std::string key = canonical_key(graph);
      if (found.count(key)) continue;
      found.emplace(std::move(key), Adjacency{canonical_relabel(graph), std::move(witness)});
    }
  }

  void extend(std::size_t from, const Cycle& sum) {
    if (!chosen.empty()) record();
    if (chosen.size() == max_m) return;
    for (std::size_t r = from; r < roots.size(); ++r) {
      bool ok = true;
      for (std::size_t c : chosen)
        if (pair_dot[c][r] < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Cycle next = sum + roots[r];
      if (!next.leq(z) || !is_almost_reduced(g, next)) continue;
      chosen.push_back(r);
      extend(r + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<Adjacency> enumerate_adjacencies(const WeightedDualGraph& g, std::size_t max_m) {
  const auto roots = positive_roots(g);
  AdjacencySearch s{g, roots, fundamental_cycle(g).z, max_m == 0 ? g.size() : max_m, {}, {}, {}};
  s.pair_dot.assign(roots.size(), std::vector<Int>(roots.size()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) s.pair_dot[i][j] = dot(g, roots[i], roots[j]);
  s.extend(0, Cycle(g.size()));
  std::vector<Adjacency> out{Adjacency{}};
  for (auto& [key, a] : s.found) out.push_back(std::move(a));
  return out;
}

RootLift lift_roots(const WeightedDualGraph& deep, const WeightedDualGraph& base,
                    const std::vector<std::size_t>& vertex_map) {
  const std::size_t n = deep.size();
  if (base.size() != n || vertex_map.size() != n) throw GraphError("graphs have different sizes");
  std::vector<bool> hit(n, false);
  for (std::size_t v : vertex_map) {
    if (v >= n || hit[v]) throw GraphError("vertex map is not a bijection");
    hit[v] = true;
  }
  RootLift out;
  for (std::size_t u = 0; u < n; ++u) {
    if (deep.weight(u) > base.weight(vertex_map[u])) throw GraphError("deep graph has a less negative weight");
    if (deep.weight(u) < base.weight(vertex_map[u])) out.deepened.push_back(u);
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && deep.mult(u, v) != base.mult(vertex_map[u], vertex_map[v]))
        throw GraphError("graphs differ in their edges");
  }
  auto to_base = [&](const Cycle& d) {
    std::vector<Int> c(n);
    for (std::size_t v = 0; v < n; ++v) c[vertex_map[v]] = d[v];
    return Cycle(std::move(c));
  };
  std::set<Cycle> expected;
  for (const auto& r : positive_roots(base)) {
    bool keep = true;
    for (std::size_t v : out.deepened)
      if (r[vertex_map[v]] > 1) keep = false;
    if (keep) expected.insert(r);
  }
  for (const auto& r : positive_roots(deep)) {
    Cycle image = to_base(r);
    if (expected.erase(image))
      out.pairs.emplace_back(r, std::move(image));
    else
      out.unmatched_deep.push_back(r);
  }
  out.unmatched_base.assign(expected.begin(), expected.end());
  return out;
}

RootLift lift_roots(const WeightedDualGraph& deep, const WeightedDualGraph& base) {
  std::vector<std::size_t> map(deep.size());
  for (std::size_t v = 0; v < deep.size(); ++v) map[v] = base.index_of(deep.id(v));
  return lift_roots(deep, base, map);
}

}  // namespace singraph
