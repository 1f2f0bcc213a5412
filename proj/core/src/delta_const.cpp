#include "singraph/delta_const.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace singraph {

std::string germ_type(const DecoratedCurve& c) {
  const std::size_t n = c.branch_count();
  bool all_smooth = true;
  for (std::size_t i = 0; i < n; ++i) all_smooth = all_smooth && c.is_smooth_branch(i);
  if (n == 1) {
    if (all_smooth) return "A0";
    const auto& m = c.multiplicities(0);
    if (m.front() != 2) return "other";
    return "A" + std::to_string(2 * std::count(m.begin(), m.end(), 2));
  }
  if (!all_smooth) return "other";
  if (n == 2) return "A" + std::to_string(2 * c.intersection(0, 1) - 1);
  return "S" + std::to_string(n);
}

std::vector<std::string> DeltaConstCandidate::singularity_types() const {
  std::vector<std::string> out;
  for (const auto& g : germs) {
    auto t = germ_type(g);
    if (t != "A0") out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedCurve smooth_branch_germ(const std::vector<std::vector<Int>>& contact, const std::vector<Int>& l) {
  const std::size_t n = l.size();
  if (contact.size() != n) throw GraphError("contact matrix and decorations differ in size");
  Cluster cl;
  const std::size_t root = cl.add_free(std::nullopt);
  // node[i][d-1]: the d-th point on branch i
  std::vector<std::vector<std::size_t>> node(n, {root});
  for (std::size_t i = 0; i < n; ++i) {
    Int depth = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) depth = std::max(depth, contact[i][j]);
    for (Int d = 2; d <= depth; ++d) {
      std::optional<std::size_t> shared;
      for (std::size_t j = 0; j < i && !shared; ++j)
        if (contact[i][j] >= d) shared = node[j][static_cast<std::size_t>(d - 1)];
      node[i].push_back(shared ? *shared : cl.add_free(node[i].back()));
    }
  }
  std::vector<CurveBranch> br;
  for (std::size_t i = 0; i < n; ++i) br.push_back({node[i].back(), l[i]});
  return DecoratedCurve(std::move(cl), std::move(br));
}

DecoratedCurve cusp_germ(int k, Int l) {
  if (k < 1) throw GraphError("A_{2k} needs k >= 1");
  Cluster cl;
  std::vector<std::size_t> p{cl.add_free(std::nullopt)};
  for (int j = 1; j < k; ++j) p.push_back(cl.add_free(p.back()));
  const std::size_t t = cl.add_free(p.back());
  const std::size_t s = cl.add_satellite(t, p.back());
  return DecoratedCurve(std::move(cl), {{s, l}});
}

namespace {

// Calls visit for every way of writing `total` as `parts` non-negative integers.
void compositions(Int total, std::size_t parts, const std::function<void(const std::vector<Int>&)>& visit) {
  std::vector<Int> cur(parts, 0);
  std::function<void(std::size_t, Int)> go = [&](std::size_t i, Int left) {
    if (parts == 0) {
      if (left == 0) visit(cur);
      return;
    }
    if (i + 1 == parts) {
      cur[i] = left;
      visit(cur);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      cur[i] = v;
      go(i + 1, left - v);
    }
  };
  go(0, total);
}

// Germs are interned by their JSON form, candidates by the sorted germ ids.
class CandidateSet {
 public:
  std::size_t intern(DecoratedCurve germ) {
    auto [it, fresh] = ids_.emplace(decorated_curve_to_json(germ), germs_.size());
    if (fresh) germs_.push_back(std::move(germ));
    return it->second;
  }

  void add(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    found_.insert(std::move(ids));
  }

  void add(std::vector<DecoratedCurve> germs) {
    std::vector<std::size_t> ids;
    for (auto& g : germs) ids.push_back(intern(std::move(g)));
    add(std::move(ids));
  }

  std::vector<DeltaConstCandidate> take() {
    // order candidates as the JSON keys of their germs would
    std::vector<std::string> keys(germs_.size());
    for (const auto& [k, id] : ids_) keys[id] = k;
    std::vector<std::pair<std::string, const std::vector<std::size_t>*>> order;
    for (const auto& ids : found_) {
      std::vector<std::size_t> sorted = ids;
      std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
      std::string key;
      for (std::size_t id : sorted) key += keys[id] + ";";
      order.emplace_back(std::move(key), &ids);
    }
    std::sort(order.begin(), order.end());
    std::vector<DeltaConstCandidate> out;
    for (const auto& [key, ids] : order) {
      std::vector<std::size_t> sorted = *ids;
      std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
      DeltaConstCandidate cand;
      for (std::size_t id : sorted) cand.germs.push_back(germs_[id]);
      out.push_back(std::move(cand));
    }
    return out;
  }

 private:
  std::map<std::string, std::size_t> ids_;
  std::vector<DecoratedCurve> germs_;
  std::set<std::vector<std::size_t>> found_;
};

void add_remainder(std::vector<DecoratedCurve>& germs, Int r) {
  if (r >= 2) germs.push_back(smooth_branch_germ({{0}}, {r}));
}

void single_smooth(const DecoratedCurve& c, CandidateSet& out) {
  // the decoration of a smooth branch may spread over several points
  std::vector<Int> parts;
  std::function<void(Int, Int)> go = [&](Int left, Int max_part) {
    if (left == 0) {
      std::vector<DecoratedCurve> germs;
      for (Int p : parts) add_remainder(germs, p);
      out.add(std::move(germs));
      return;
    }
    for (Int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      go(left - p, p);
      parts.pop_back();
    }
  };
  go(c.l(0), c.l(0));
}

void cusp_series(int k, Int l, std::size_t depth, CandidateSet& out) {
  std::vector<int> odd;  // the m_i of the A_{2m_i - 1}
  std::function<void(int, int, int)> parts = [&](int even, int left, int max_part) {
    if (left == 0) {
      const std::size_t germ_count = (even > 0 ? 1 : 0) + odd.size();
      if (germ_count > depth) return;
      // slots: the A_{2l} (if any), two per A_{2m-1}, the remainder
      std::vector<Int> lower;
      if (even > 0) lower.push_back(2 * even);
      for (int m : odd) lower.insert(lower.end(), {m, m});
      lower.push_back(0);
      Int excess = l;
      for (Int v : lower) excess -= v;
      if (excess < 0) return;
      compositions(excess, lower.size(), [&](const std::vector<Int>& extra) {
        std::vector<DecoratedCurve> germs;
        std::size_t s = 0;
        if (even > 0) {
          germs.push_back(cusp_germ(even, lower[s] + extra[s]));
          ++s;
        }
        for (int m : odd) {
          germs.push_back(smooth_branch_germ({{0, m}, {m, 0}}, {lower[s] + extra[s], lower[s + 1] + extra[s + 1]}));
          s += 2;
        }
        add_remainder(germs, extra[s]);
        out.add(std::move(germs));
      });
      return;
    }
    for (int m = std::min(left, max_part); m >= 1; --m) {
      odd.push_back(m);
      parts(even, left - m, m);
      odd.pop_back();
    }
  };
  for (int even = k; even >= 0; --even) parts(even, k - even, k - even);
}

bool is_ultrametric(const std::vector<std::size_t>& members, const std::vector<std::vector<Int>>& c) {
  for (std::size_t a : members)
    for (std::size_t b : members)
      for (std::size_t d : members)
        if (a != b && b != d && a != d && c[a][d] < std::min(c[a][b], c[b][d])) return false;
  return true;
}

void smooth_branches(const DecoratedCurve& c, std::size_t depth, CandidateSet& out) {
  const std::size_t n = c.branch_count();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m)
    if (__builtin_popcount(m) >= 2) masks.push_back(m);

  std::vector<unsigned> points;
  std::set<std::vector<std::vector<Int>>> seen;
  std::map<std::pair<std::vector<std::vector<Int>>, std::vector<Int>>, std::size_t> built;
  auto germ_id = [&](const std::vector<std::vector<Int>>& cm, const std::vector<Int>& dec) {
    auto it = built.find({cm, dec});
    if (it == built.end()) it = built.emplace(std::pair{cm, dec}, out.intern(smooth_branch_germ(cm, dec))).first;
    return it->second;
  };
  // per point, a symmetric contact matrix over all branches
  std::vector<std::vector<std::vector<Int>>> contact;

  auto decorate = [&]() {
    const std::size_t np = points.size();
    std::vector<std::vector<Int>> lower(n, std::vector<Int>(np, 0));
    std::vector<std::size_t> slots;  // (branch, point) pairs flattened as branch * np + point
    std::vector<Int> excess(n);
    for (std::size_t i = 0; i < n; ++i) {
      Int used = 0;
      for (std::size_t p = 0; p < np; ++p)
        if (points[p] >> i & 1u) {
          for (std::size_t j = 0; j < n; ++j) lower[i][p] = std::max(lower[i][p], contact[p][i][j]);
          used += lower[i][p];
        }
      excess[i] = c.l(i) - used;
      if (excess[i] < 0) return;
    }
    // distribute each branch's excess over its points and a remainder
    std::vector<std::vector<Int>> chosen(n);
    std::function<void(std::size_t)> branch = [&](std::size_t i) {
      if (i == n) {
        // germs are built only for splittings not seen before
        std::vector<std::vector<std::vector<Int>>> cms(np);
        std::vector<std::vector<Int>> decs(np);
        std::vector<std::vector<Int>> keys;
        for (std::size_t p = 0; p < np; ++p) {
          std::vector<std::size_t> members;
          for (std::size_t b = 0; b < n; ++b)
            if (points[p] >> b & 1u) members.push_back(b);
          auto& cm = cms[p];
          cm.assign(members.size(), std::vector<Int>(members.size(), 0));
          std::vector<Int> key{static_cast<Int>(points[p])};
          for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
              cm[a][b] = contact[p][members[a]][members[b]];
              if (a < b) key.push_back(cm[a][b]);
            }
            std::size_t k = 0;
            for (std::size_t q = 0; q < p; ++q)
              if (points[q] >> members[a] & 1u) ++k;
            decs[p].push_back(lower[members[a]][p] + chosen[members[a]][k]);
            key.push_back(decs[p].back());
          }
          keys.push_back(std::move(key));
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t b = 0; b < n; ++b) keys.push_back({-1, chosen[b].back() >= 2 ? chosen[b].back() : 0});
        if (!seen.insert(std::move(keys)).second) return;
        std::vector<std::size_t> ids;
        for (std::size_t p = 0; p < np; ++p) ids.push_back(germ_id(cms[p], decs[p]));
        for (std::size_t b = 0; b < n; ++b)
          if (chosen[b].back() >= 2) ids.push_back(germ_id({{0}}, {chosen[b].back()}));
        out.add(std::move(ids));
        return;
      }
      std::size_t k = 0;
      for (std::size_t p = 0; p < np; ++p)
        if (points[p] >> i & 1u) ++k;
      compositions(excess[i], k + 1, [&](const std::vector<Int>& e) {
        chosen[i] = e;
        branch(i + 1);
      });
    };
    branch(0);
  };

  // split each pairwise intersection number over the points containing the pair
  std::function<void(std::size_t)> split = [&](std::size_t pi) {
    if (pi == pairs.size()) {
      for (std::size_t p = 0; p < points.size(); ++p) {
        std::vector<std::size_t> members;
        for (std::size_t b = 0; b < n; ++b)
          if (points[p] >> b & 1u) members.push_back(b);
        if (!is_ultrametric(members, contact[p])) return;
      }
      decorate();
      return;
    }
    const auto [i, j] = pairs[pi];
    std::vector<std::size_t> shared;
    for (std::size_t p = 0; p < points.size(); ++p)
      if ((points[p] >> i & 1u) && (points[p] >> j & 1u)) shared.push_back(p);
    const Int total = c.intersection(i, j);
    if (shared.empty()) {
      if (total == 0) split(pi + 1);
      return;
    }
    if (total < static_cast<Int>(shared.size())) return;
    compositions(total - static_cast<Int>(shared.size()), shared.size(), [&](const std::vector<Int>& e) {
      for (std::size_t k = 0; k < shared.size(); ++k) {
        contact[shared[k]][i][j] = contact[shared[k]][j][i] = 1 + e[k];
      }
      // prune on triangles whose other two sides are already set (unset entries are 0)
      bool ok = true;
      for (std::size_t p : shared)
        for (std::size_t k = 0; k < n && ok; ++k) {
          const Int a = contact[p][i][k], b = contact[p][j][k], x = contact[p][i][j];
          if (a == 0 || b == 0) continue;
          const Int lo = std::min({a, b, x});
          ok = (a == lo) + (b == lo) + (x == lo) >= 2;
        }
      if (ok) split(pi + 1);
      for (std::size_t p : shared) contact[p][i][j] = contact[p][j][i] = 0;
    });
  };

  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (!points.empty()) split(0);
    if (points.size() == depth) return;
    for (std::size_t k = from; k < masks.size(); ++k) {
      points.push_back(masks[k]);
      contact.emplace_back(n, std::vector<Int>(n, 0));
      choose(k);
      contact.pop_back();
      points.pop_back();
    }
  };
  choose(0);
}

}  // namespace

std::vector<DeltaConstCandidate> delta_const_candidates(const DecoratedCurve& c, std::size_t depth) {
  if (c.branch_count() == 0) throw GraphError("decorated curve without branches");
  CandidateSet out;
  bool all_smooth = true;
  for (std::size_t i = 0; i < c.branch_count(); ++i) all_smooth = all_smooth && c.is_smooth_branch(i);
  if (all_smooth && c.branch_count() == 1) {
    single_smooth(c, out);
  } else if (all_smooth) {
    smooth_branches(c, depth == 0 ? 3 : depth, out);
  } else if (c.branch_count() == 1 && c.multiplicities(0).front() == 2) {
    const auto& m = c.multiplicities(0);
    const int k = static_cast<int>(std::count(m.begin(), m.end(), 2));
    cusp_series(k, c.l(0), depth == 0 ? static_cast<std::size_t>(k) : depth, out);
  } else {
    throw GraphError("delta-constant candidates are implemented for smooth branches and single A_{2k} branches");
  }
  return out.take();
}

}  // namespace singraph
