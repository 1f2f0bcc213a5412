#include "singraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace singraph {

namespace {

struct Encoded {
  std::string key;
  std::vector<std::size_t> order;  // indices into the component, canonical order
};

std::string ahu(const WeightedDualGraph& g, std::size_t v, std::size_t parent, std::vector<std::size_t>& order_out);

// Encodes the subtree at v and appends its canonical vertex order.
std::string ahu(const WeightedDualGraph& g, std::size_t v, std::size_t parent, std::vector<std::size_t>& order_out) {
  std::vector<std::pair<std::string, std::vector<std::size_t>>> kids;
  for (std::size_t u : g.neighbors(v)) {
    if (u == parent) continue;
    std::vector<std::size_t> sub;
    std::string code = ahu(g, u, v, sub);
    if (g.mult(u, v) != 1) code = "*" + std::to_string(g.mult(u, v)) + code;
    kids.emplace_back(std::move(code), std::move(sub));
  }
  std::sort(kids.begin(), kids.end());
  std::string code = "(" + std::to_string(g.weight(v));
  order_out.push_back(v);
  for (auto& [c, sub] : kids) {
    code += c;
    order_out.insert(order_out.end(), sub.begin(), sub.end());
  }
  code += ")";
  return code;
}

std::vector<std::size_t> tree_centers(const WeightedDualGraph& g) {
  const std::size_t n = g.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.neighbors(v).size();
    if (deg[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : leaves)
      for (std::size_t u : g.neighbors(leaf))
        if (--deg[u] == 1) next.push_back(u);
    for (std::size_t leaf : leaves) deg[leaf] = 0;
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

Encoded encode_tree(const WeightedDualGraph& g) {
  Encoded best;
  bool first = true;
  for (std::size_t c : tree_centers(g)) {
    Encoded e;
    e.key = "T" + ahu(g, c, g.size(), e.order);
    if (first || e.key < best.key) best = std::move(e);
    first = false;
  }
  return best;
}

std::vector<std::size_t> refined_colors(const WeightedDualGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> color(n, 0);
  {
    std::map<Int, std::size_t> rank;
    for (std::size_t v = 0; v < n; ++v) rank[g.weight(v)] = 0;
    std::size_t r = 0;
    for (auto& [w, k] : rank) k = r++;
    for (std::size_t v = 0; v < n; ++v) color[v] = rank[g.weight(v)];
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<std::size_t> nb;
      for (std::size_t u : g.neighbors(v)) nb.push_back(color[u] * 1024 + static_cast<std::size_t>(g.mult(u, v)));
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (auto& s : sig) rank[s] = 0;
    std::size_t r = 0;
    for (auto& [s, k] : rank) k = r++;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) next[v] = rank[sig[v]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct ExhaustiveSearch {
  const WeightedDualGraph& g;
  std::vector<std::size_t> slot_color;  // color required at each position
  std::vector<std::size_t> color;
  std::vector<Int> best_code;
  std::vector<std::size_t> best_order;
  std::vector<Int> code;
  std::vector<std::size_t> order;
  std::vector<bool> used;
  bool have_best = false;

  void run(std::size_t pos) {
    const std::size_t n = g.size();
    if (pos == n) {
      if (!have_best || code < best_code) {
        best_code = code;
        best_order = order;
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || color[v] != slot_color[pos]) continue;
      const std::size_t mark = code.size();
      for (std::size_t j = 0; j < pos; ++j) code.push_back(g.mult(v, order[j]));
      // prune when the prefix is already worse than the best complete code
      if (have_best && std::lexicographical_compare(best_code.begin(), best_code.begin() + code.size(), code.begin(),
                                                    code.end())) {
        code.resize(mark);
        continue;
      }
      used[v] = true;
      order.push_back(v);
      run(pos + 1);
      order.pop_back();
      used[v] = false;
      code.resize(mark);
    }
  }
};

Encoded encode_general(const WeightedDualGraph& g) {
  if (g.size() > kMaxExhaustiveIsoVertices)
    throw GuardExceeded("isomorphism test for non-tree graphs is limited to " +
                        std::to_string(kMaxExhaustiveIsoVertices) + " vertices");
  ExhaustiveSearch s{g, {}, refined_colors(g), {}, {}, {}, {}, std::vector<bool>(g.size(), false)};
  std::vector<std::size_t> by_color(g.size());
  std::iota(by_color.begin(), by_color.end(), 0);
  std::stable_sort(by_color.begin(), by_color.end(), [&](std::size_t a, std::size_t b) { return s.color[a] < s.color[b]; });
  for (std::size_t v : by_color) s.slot_color.push_back(s.color[v]);
  s.run(0);
  Encoded e;
  e.key = "G[";
  for (std::size_t v : s.best_order) e.key += std::to_string(g.weight(v)) + ",";
  e.key += ";";
  for (Int x : s.best_code) e.key += std::to_string(x) + ",";
  e.key += "]";
  e.order = s.best_order;
  return e;
}

std::vector<std::pair<Encoded, std::vector<std::size_t>>> encode_components(const WeightedDualGraph& g) {
  std::vector<std::pair<Encoded, std::vector<std::size_t>>> parts;
  for (const auto& comp : connected_components(g)) {
    const WeightedDualGraph sub = subgraph(g, comp);
    Encoded e = sub.is_tree() ? encode_tree(sub) : encode_general(sub);
    parts.emplace_back(std::move(e), comp);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first.key < b.first.key; });
  return parts;
}

}  // namespace

std::string canonical_key(const WeightedDualGraph& g) {
  std::string key;
  for (const auto& [e, comp] : encode_components(g)) {
    if (!key.empty()) key += "|";
    key += e.key;
  }
  return key;
}

bool is_isomorphic(const WeightedDualGraph& a, const WeightedDualGraph& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

WeightedDualGraph canonical_relabel(const WeightedDualGraph& g) {
  std::vector<std::size_t> order;
  for (const auto& [e, comp] : encode_components(g))
    for (std::size_t local : e.order) order.push_back(comp[local]);
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < order.size(); ++i) vs.push_back({"v" + std::to_string(i + 1), g.weight(order[i])});
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edge_specs())
    es.push_back({"v" + std::to_string(pos[g.index_of(e.a)] + 1), "v" + std::to_string(pos[g.index_of(e.b)] + 1), e.mult});
  return WeightedDualGraph(std::move(vs), std::move(es));
}

}  // namespace singraph
