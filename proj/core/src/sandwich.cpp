#include "singraph/sandwich.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "singraph/canonical.hpp"
#include "singraph/classify.hpp"
#include "singraph/cycle_algebra.hpp"

namespace singraph {

namespace {

// Base graph plus counts[v] (-1)-vertices hanging off each vertex v.
AugmentedGraph augment(const WeightedDualGraph& g, const std::vector<Int>& counts) {
  auto vs = g.vertex_specs();
  auto es = g.edge_specs();
  std::set<std::string> used(g.ids().begin(), g.ids().end());
  std::vector<std::pair<std::string, std::string>> arrows;  // (-1)-vertex, base vertex
  int next = 1;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (Int k = 0; k < counts[v]; ++k) {
      std::string id;
      do id = "a" + std::to_string(next++);
      while (used.count(id));
      used.insert(id);
      vs.push_back({id, -1});
      es.push_back({g.id(v), id, 1});
      arrows.emplace_back(id, g.id(v));
    }
  AugmentedGraph out{WeightedDualGraph(std::move(vs), std::move(es)), {}, {}};
  for (const auto& [a, v] : arrows) {
    out.arrows.push_back(out.graph.index_of(a));
    out.attached_to.push_back(out.graph.index_of(v));
  }
  return out;
}

std::size_t default_end(const WeightedDualGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.neighbors(v).size() <= 1) return v;
  return 0;
}

}  // namespace

AugmentedGraph attach_arrows(const WeightedDualGraph& g, std::optional<std::size_t> e0) {
  const auto z = fundamental_cycle(g).z;
  if (!z.is_reduced()) throw GraphError("arrow recipe needs a reduced fundamental cycle");
  const std::size_t start = e0 ? *e0 : default_end(g);
  if (start >= g.size()) throw GraphError("start vertex outside the graph");
  std::vector<Int> counts(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) counts[v] = -dot_vertex(g, v, z) - (v == start ? 1 : 0);
  if (counts[start] < 0) throw GraphError("vertex " + g.id(start) + " has Z.E = 0 and cannot be the first curve");
  return augment(g, counts);
}

ProximityMatrix proximity_factorize(const WeightedDualGraph& g) {
  struct Step {
    std::string vertex;
    std::vector<std::string> neighbors;
  };
  std::vector<Step> steps;
  WeightedDualGraph cur = g;
  while (!cur.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t v = 0; v < cur.size() && !pick; ++v) {
      if (cur.weight(v) != -1) continue;
      const auto nb = cur.neighbors(v);
      if (nb.size() > 2) continue;
      if (std::all_of(nb.begin(), nb.end(), [&](std::size_t u) { return cur.mult(u, v) == 1; })) pick = v;
    }
    if (!pick) throw NotBlowdownable("no contractible (-1)-curve left among " + std::to_string(cur.size()) + " curves");
    Step s{cur.id(*pick), {}};
    for (std::size_t u : cur.neighbors(*pick)) s.neighbors.push_back(cur.id(u));
    if (s.neighbors.empty() && cur.size() > 1) throw NotBlowdownable("configuration is not connected");
    steps.push_back(std::move(s));
    try {
      cur = contract(cur, *pick);
    } catch (const GraphError& e) {
      throw NotBlowdownable(std::string("contraction leaves a curve of non-negative self-intersection: ") + e.what());
    }
  }
  std::reverse(steps.begin(), steps.end());
  std::map<std::string, int> point_of;
  for (std::size_t k = 0; k < steps.size(); ++k) point_of[steps[k].vertex] = static_cast<int>(k) + 1;
  std::vector<ClusterPoint> pts;
  for (const auto& s : steps) {
    ClusterPoint pt{point_of[s.vertex], std::nullopt, {}};
    for (const auto& u : s.neighbors) pt.proximate_to.push_back(point_of[u]);
    if (!pt.proximate_to.empty()) pt.parent = *std::max_element(pt.proximate_to.begin(), pt.proximate_to.end());
    pts.push_back(std::move(pt));
  }
  ProximityMatrix out;
  try {
    out.cluster = Cluster(std::move(pts));
  } catch (const GraphError& e) {
    throw NotBlowdownable(std::string("contraction order is not a blow-up sequence: ") + e.what());
  }
  for (const auto& s : steps) out.order.push_back(g.index_of(s.vertex));
  const auto form = out.cluster.intersection_matrix();
  for (std::size_t a = 0; a < out.order.size(); ++a)
    for (std::size_t b = 0; b < out.order.size(); ++b)
      if (form[a][b] != g.form(out.order[a], out.order[b]))
        throw NotBlowdownable("intersection form differs from -P^T P");
  return out;
}

ProximityMatrix proximity_factorize(const AugmentedGraph& a) { return proximity_factorize(a.graph); }

DecoratedCurve decorated_curve_of(const AugmentedGraph& a, const ProximityMatrix& p) {
  std::vector<std::size_t> point_of(a.graph.size());
  for (std::size_t k = 0; k < p.order.size(); ++k) point_of[p.order[k]] = k;
  std::vector<CurveBranch> branches;
  for (std::size_t arrow : a.arrows) {
    const std::size_t at = point_of[arrow];
    Int l = 0;
    for (Int m : p.cluster.branch_multiplicities(at)) l += m;
    branches.push_back({at, l});
  }
  return DecoratedCurve(p.cluster, std::move(branches));
}

std::vector<WeightedDualGraph> graph_of(const DecoratedCurve& c) {
  Cluster ext = c.cluster();
  const auto sing = c.singular_points();
  std::vector<bool> in_t(ext.size(), false);
  for (std::size_t p = 0; p < sing.size(); ++p) in_t[p] = sing[p];
  std::vector<std::size_t> tips;  // last point of each branch in the extended cluster
  for (std::size_t i = 0; i < c.branch_count(); ++i) {
    Int extra = c.l(i) - c.m(i);
    std::size_t last = c.branches()[i].attach;
    for (std::size_t p : ext.path_to(last))
      if (!sing[p] && extra > 0) {
        in_t[p] = true;
        --extra;
      }
    for (; extra > 0; --extra) {
      last = ext.add_free(last);
      in_t.push_back(true);
    }
    tips.push_back(last);
  }
  std::vector<ClusterPoint> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t p = 0; p < ext.size(); ++p)
    if (in_t[p]) {
      kept.push_back(ext.point(p));
      kept_index.push_back(p);
    }
  if (kept.empty()) return {};
  const Cluster t(std::move(kept));
  const auto prox = t.proximity_matrix();
  std::vector<bool> meets_branch(t.size(), false);
  for (std::size_t tip : tips) {
    const auto full = ext.branch_multiplicities(tip);
    std::vector<Int> m(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) m[k] = full[kept_index[k]];
    for (std::size_t a = 0; a < t.size(); ++a) {
      Int s = 0;
      for (std::size_t q = 0; q < t.size(); ++q) s += prox[q][a] * m[q];
      if (s != 0) meets_branch[a] = true;
    }
  }
  std::vector<std::size_t> compact;
  for (std::size_t a = 0; a < t.size(); ++a)
    if (!meets_branch[a]) compact.push_back(a);
  if (compact.empty()) return {};
  return component_graphs(subgraph(t.exceptional_graph(), compact));
}

DecoratedCurve recipe_iii3(int k, int s, const Iii3Arms& arms) {
  if (k < 1 || s < 0) throw GraphError("recipe III.3 needs k >= 1 and s >= 0");
  Cluster cl;
  std::vector<std::size_t> p;
  p.push_back(cl.add_free(std::nullopt));
  for (int j = 1; j < k; ++j) p.push_back(cl.add_free(p.back()));
  const std::size_t tangent = cl.add_free(p.back());
  const std::size_t sat = cl.add_satellite(tangent, p.back());
  int reach = 0;
  for (int n : arms.right) {
    if (n < 1 || n > s + 1) throw GraphError("right arm branch position must lie in 1..s+1");
    reach = std::max(reach, n);
  }
  std::vector<std::size_t> q{sat};
  for (int j = 0; j < reach; ++j) q.push_back(cl.add_free(q.back()));
  std::vector<CurveBranch> br{{q.back(), 2 * k + 4 + s}};
  for (int m : arms.left) {
    if (m < 1 || m > k) throw GraphError("left arm branch position must lie in 1..k");
    br.push_back({p[static_cast<std::size_t>(m - 1)], m + 1});
  }
  for (int j = 0; j < arms.short_arm; ++j) br.push_back({tangent, k + 2});
  for (int n : arms.right) br.push_back({q[static_cast<std::size_t>(n)], 2 * k + 3 + n});
  return DecoratedCurve(std::move(cl), std::move(br));
}

std::string to_string(Iii4Variant v) {
  switch (v) {
    case Iii4Variant::E6: return "E6";
    case Iii4Variant::E8: return "E8";
    case Iii4Variant::Cusp: return "cusp";
  }
  return "?";
}

DecoratedCurve recipe_iii4(Iii4Variant variant, int k, const Iii4Arms& arms) {
  Cluster cl;
  std::vector<CurveBranch> br;
  if (variant == Iii4Variant::Cusp) {
    if (k <= 2) throw GraphError("the (x^3 + y^{3k-1}, 4+3k) recipe needs k > 2");
    if (arms.first || arms.second || !arms.right.empty())
      throw GraphError("extra branches are not supported for the cusp variant");
    std::vector<std::size_t> p{cl.add_free(std::nullopt)};
    for (int j = 1; j < k; ++j) p.push_back(cl.add_free(p.back()));
    const std::size_t a = cl.add_satellite(p[static_cast<std::size_t>(k - 1)], p[static_cast<std::size_t>(k - 2)]);
    const std::size_t b = cl.add_satellite(a, p[static_cast<std::size_t>(k - 1)]);
    br.push_back({b, 4 + 3 * k});
    return DecoratedCurve(std::move(cl), std::move(br));
  }
  if (k < 2) throw GraphError("recipe III.4 needs k >= 2");
  if (variant == Iii4Variant::E8 && arms.second) throw GraphError("l = 3 branches belong to the E6 variant");
  const std::size_t p1 = cl.add_free(std::nullopt);
  const std::size_t p2 = cl.add_free(p1);
  const std::size_t p3 = cl.add_satellite(p2, p1);
  const std::size_t p4 = cl.add_satellite(p3, variant == Iii4Variant::E6 ? p1 : p2);
  int reach = 0;
  for (int t : arms.right) {
    if (t < 1 || t > k) throw GraphError("right arm branch position must lie in 1..k");
    reach = std::max(reach, t);
  }
  std::vector<std::size_t> q{p4};
  for (int j = 0; j < reach; ++j) q.push_back(cl.add_free(q.back()));
  const int base = variant == Iii4Variant::E6 ? 7 : 8;
  br.push_back({q.back(), k + base});
  for (int j = 0; j < arms.first; ++j) br.push_back({p1, 2});
  for (int j = 0; j < arms.second; ++j) br.push_back({p2, 3});
  for (int t : arms.right) br.push_back({q[static_cast<std::size_t>(t)], t + base});
  return DecoratedCurve(std::move(cl), std::move(br));
}

std::size_t ends_bound(const DecoratedCurve& c, const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<bool> covered(c.branch_count(), false);
  for (const auto& part : parts)
    for (std::size_t i : part) {
      if (i >= c.branch_count()) throw GraphError("partition names a branch that does not exist");
      covered[i] = true;
    }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw GraphError("partition does not cover every branch");
  for (std::size_t i = 0; i < c.branch_count(); ++i)
    if (!c.is_smooth_branch(i)) throw GraphError("ends bound needs smooth branches");
  for (const auto& part : parts)
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const Int x = c.intersection(part[a], part[b]);
        const Int lo = std::min(c.l(part[a]), c.l(part[b]));
        if (lo < x || lo > x + 1)
          throw GraphError("branches " + std::to_string(part[a] + 1) + " and " + std::to_string(part[b] + 1) +
                           " violate C_i.C_j <= min l <= C_i.C_j + 1");
      }
  const std::size_t bound = parts.size() + 1;
  for (const auto& comp : graph_of(c))
    if (ends(comp) > bound) throw Error("singularity of X(C,l) has more ends than the bound");
  return bound;
}

bool is_admissible_e8_profile(const std::vector<Int>& multiplicities, int t) {
  if (t < 0) return false;
  std::vector<Int> a{3, 2};
  a.insert(a.end(), static_cast<std::size_t>(t + 3), 1);
  std::vector<Int> b{2, 2, 2, 2};
  b.insert(b.end(), static_cast<std::size_t>(t), 1);
  return multiplicities == a || multiplicities == b;
}

std::string to_string(SandwichAnswer a) {
  switch (a) {
    case SandwichAnswer::Yes: return "yes";
    case SandwichAnswer::No: return "no";
    case SandwichAnswer::Unknown: return "unknown";
  }
  return "?";
}

namespace {

enum class Outcome { Found, Failed, Cut };

// Contraction orders of the base graph in which a vertex is contracted once
// enough (-1)-vertices hang off it to make it a (-1)-curve.
struct BlowdownSearch {
  Int budget;
  std::map<std::string, Int> arrows;
  std::map<std::string, Outcome> memo;

  Outcome run(const WeightedDualGraph& cur) {
    if (cur.empty()) return Outcome::Found;
    const std::string key = canonical_key(cur);
    if (auto it = memo.find(key); it != memo.end() && it->second != Outcome::Found) return it->second;
    bool cut = false;
    for (std::size_t v = 0; v < cur.size(); ++v) {
      const auto nb = cur.neighbors(v);
      if (nb.size() > 2 || (nb.empty() && cur.size() > 1)) continue;
      if (!std::all_of(nb.begin(), nb.end(), [&](std::size_t u) { return cur.mult(u, v) == 1; })) continue;
      // a neighbour reaching weight 0 could never be contracted
      if (std::any_of(nb.begin(), nb.end(), [&](std::size_t u) { return cur.weight(u) > -2; })) continue;
      const Int need = -1 - cur.weight(v);
      if (need > budget) {
        cut = true;
        continue;
      }
      auto w = cur.weights();
      w[v] = -1;
      arrows[cur.id(v)] = need;
      const Outcome r = run(contract(cur.with_weights(std::move(w)), v));
      if (r == Outcome::Found) return r;
      if (r == Outcome::Cut) cut = true;
      arrows.erase(cur.id(v));
    }
    const Outcome r = cut ? Outcome::Cut : Outcome::Failed;
    memo[key] = r;
    return r;
  }
};

}  // namespace

SandwichVerdict is_sandwiched(const WeightedDualGraph& g, Int arrow_budget) {
  if (g.empty()) throw GraphError("empty graph");
  const auto z = fundamental_cycle(g).z;
  const bool rational = arithmetic_genus(g, z) == 0;
  const Int budget = arrow_budget > 0 ? arrow_budget : -dot(g, z, z);
  if (rational && z.is_reduced()) {
    std::vector<std::size_t> starts;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.neighbors(v).size() <= 1) starts.push_back(v);
    for (std::size_t e0 : starts) {
      if (dot_vertex(g, e0, z) >= 0) continue;
      auto a = attach_arrows(g, e0);
      try {
        proximity_factorize(a);
        return {SandwichAnswer::Yes, std::move(a), "arrow recipe from end " + g.id(e0)};
      } catch (const NotBlowdownable&) {
      }
    }
  }
  BlowdownSearch search{budget, {}, {}};
  const Outcome r = search.run(g);
  const bool obstructed = rational && sandwich_obstruction(g);
  if (r == Outcome::Found) {
    if (obstructed) throw Error("blow-down found for a graph the multiplicity-one criterion excludes");
    std::vector<Int> counts(g.size(), 0);
    for (const auto& [id, n] : search.arrows) counts[g.index_of(id)] = n;
    auto a = augment(g, counts);
    proximity_factorize(a);
    return {SandwichAnswer::Yes, std::move(a), "contraction search"};
  }
  if (obstructed) return {SandwichAnswer::No, std::nullopt, "excluded by the multiplicity-one criterion"};
  if (r == Outcome::Failed) return {SandwichAnswer::No, std::nullopt, "no contraction order blows the graph down"};
  return {SandwichAnswer::Unknown, std::nullopt,
          "arrow budget of " + std::to_string(budget) + " per vertex exhausted"};
}

}  // namespace singraph
