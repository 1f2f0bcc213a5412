#include "singraph/universe.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "singraph/canonical.hpp"
#include "singraph/cycle_algebra.hpp"

namespace singraph {

std::vector<WeightedDualGraph> unlabeled_trees(std::size_t n) {
  if (n == 0) return {};
  std::map<std::string, WeightedDualGraph> level;
  level.emplace(canonical_key(make_chain({-2})), make_chain({-2}));
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, WeightedDualGraph> next;
    for (const auto& [key, t] : level)
      for (std::size_t v = 0; v < t.size(); ++v) {
        auto vs = t.vertex_specs();
        auto es = t.edge_specs();
        const std::string fresh = t.fresh_id("t");
        vs.push_back({fresh, -2});
        es.push_back({t.id(v), fresh, 1});
        WeightedDualGraph grown(std::move(vs), std::move(es));
        std::string k = canonical_key(grown);
        if (!next.count(k)) next.emplace(std::move(k), canonical_relabel(grown));
      }
    level = std::move(next);
  }
  std::vector<WeightedDualGraph> out;
  for (auto& [key, t] : level) out.push_back(t);
  return out;
}

namespace {

// All vertex permutations preserving adjacency.
std::vector<std::vector<std::size_t>> automorphisms(const WeightedDualGraph& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img] || t.valency(img) != t.valency(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = t.mult(i, j) == t.mult(img, perm[j]);
      if (!ok) continue;
      used[img] = true;
      perm[i] = img;
      go(i + 1);
      used[img] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace

void for_each_weighted_tree(std::size_t max_vertices, Int min_weight, Int max_weight,
                            const std::function<void(const WeightedDualGraph&)>& visit) {
  if (min_weight > max_weight) return;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const auto& t : unlabeled_trees(n)) {
      const auto autos = automorphisms(t);
      std::vector<Int> w(n, max_weight);
      for (;;) {
        // keep only the lexicographically greatest weighting in each orbit
        bool canonical = true;
        for (const auto& p : autos) {
          std::vector<Int> image(n);
          for (std::size_t v = 0; v < n; ++v) image[p[v]] = w[v];
          if (image > w) {
            canonical = false;
            break;
          }
        }
        if (canonical) visit(t.with_weights(w));
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
          --i;
          if (w[i] > min_weight) {
            --w[i];
            done = false;
            break;
          }
          w[i] = max_weight;
        }
        if (done) break;
      }
    }
  }
}

std::vector<WeightedDualGraph> rational_tree_universe(std::size_t max_vertices, Int min_weight) {
  std::vector<WeightedDualGraph> out;
  for_each_weighted_tree(max_vertices, min_weight, -2, [&](const WeightedDualGraph& g) {
    if (is_negative_definite(g) && is_rational(g)) out.push_back(g);
  });
  return out;
}

}  // namespace singraph
