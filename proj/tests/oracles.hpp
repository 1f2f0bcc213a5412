#pragma once

// Brute-force reference computations for the tests. They work on the raw
// intersection matrix and avoid the library's algorithms on purpose.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singraph/graph.hpp"

namespace oracle {

using singraph::Int;
using Vec = std::vector<Int>;
using Form = std::vector<Vec>;

inline Form form_of(const singraph::WeightedDualGraph& g) {
  Form f(g.size(), Vec(g.size(), 0));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) f[u][v] = g.form(u, v);
  return f;
}

inline Int pair(const Form& f, const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t u = 0; u < f.size(); ++u)
    for (std::size_t v = 0; v < f.size(); ++v) s += a[u] * f[u][v] * b[v];
  return s;
}

// p_a(D) = 1 + (D.D + K.D)/2 with K.E_v = -E_v.E_v - 2.
inline Int genus(const Form& f, const Vec& d) {
  Int kd = 0;
  for (std::size_t v = 0; v < f.size(); ++v) kd += d[v] * (-f[v][v] - 2);
  return 1 + (pair(f, d, d) + kd) / 2;
}

// Calls visit on every vector with 0 <= d_v <= hi_v, except zero.
inline void for_each_in_box(const Vec& hi, const std::function<void(const Vec&)>& visit) {
  Vec d(hi.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < d.size() && d[i] == hi[i]) d[i++] = 0;
    if (i == d.size()) return;
    ++d[i];
    visit(d);
  }
}

// Least positive cycle with D.E_v <= 0 for all v, searched in [0, bound]^n.
inline std::optional<Vec> fundamental_cycle(const singraph::WeightedDualGraph& g, Int bound) {
  const Form f = form_of(g);
  const std::size_t n = g.size();
  std::optional<Vec> best;
  for_each_in_box(Vec(n, bound), [&](const Vec& d) {
    for (std::size_t v = 0; v < n; ++v) {
      Int s = 0;
      for (std::size_t u = 0; u < n; ++u) s += f[v][u] * d[u];
      if (s > 0) return;
    }
    if (!best) {
      best = d;
      return;
    }
    Vec m(n);
    for (std::size_t v = 0; v < n; ++v) m[v] = std::min((*best)[v], d[v]);
    best = m;
  });
  return best;
}

// Positive roots 0 < D <= z, in the box order.
inline std::vector<Vec> roots_below(const singraph::WeightedDualGraph& g, const Vec& z) {
  const Form f = form_of(g);
  std::vector<Vec> out;
  for_each_in_box(z, [&](const Vec& d) {
    if (genus(f, d) == 0) out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// All lists m_1 >= m_2 >= ... >= 1 summing to n.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

// Branch-type sets of the A_{2k} splitting rule: one A_{2l} (absent when
// l = 0) and A_{2m_i - 1} for a partition of k - l, including the trivial one.
inline std::vector<std::vector<std::string>> a_series_types(int k) {
  std::vector<std::vector<std::string>> out;
  for (int l = 0; l <= k; ++l)
    for (const auto& ms : partitions(k - l)) {
      std::vector<std::string> types;
      if (l > 0) types.push_back("A" + std::to_string(2 * l));
      for (int m : ms) types.push_back("A" + std::to_string(2 * m - 1));
      std::sort(types.begin(), types.end());
      out.push_back(types);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Can target be written as a non-negative integer combination of gens?
inline bool in_cone(const Vec& target, const std::vector<Vec>& gens, std::size_t from = 0) {
  if (std::all_of(target.begin(), target.end(), [](Int x) { return x == 0; })) return true;
  for (std::size_t i = from; i < gens.size(); ++i) {
    Vec rest = target;
    bool fits = true;
    for (std::size_t v = 0; v < rest.size() && fits; ++v) fits = (rest[v] -= gens[i][v]) >= 0;
    if (fits && in_cone(rest, gens, i)) return true;
  }
  return false;
}

// Literal integral minimality: no other multiset of m roots generates every D_i.
inline bool integrally_minimal(const std::vector<Vec>& roots, std::vector<Vec> col) {
  const std::size_t m = col.size();
  std::sort(col.begin(), col.end());
  std::vector<Vec> pick;
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    if (pick.size() == m) {
      auto sorted = pick;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == col) return false;
      for (const auto& d : col)
        if (!in_cone(d, pick)) return false;
      return true;
    }
    for (std::size_t i = from; i < roots.size(); ++i) {
      pick.push_back(roots[i]);
      if (search(i)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !search(0);
}

}  // namespace oracle
