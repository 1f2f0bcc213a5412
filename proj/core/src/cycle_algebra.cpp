#include "singraph/cycle_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace singraph {

FundamentalCycle fundamental_cycle(const WeightedDualGraph& g, std::size_t start, const SequenceChooser& choose) {
  if (g.empty()) throw GraphError("fundamental cycle of an empty graph");
  if (!g.is_connected()) throw GraphError("fundamental cycle needs a connected graph");
  if (!is_negative_definite(g)) throw NotNegativeDefinite("intersection form is not negative definite");
  const std::size_t n = g.size();
  FundamentalCycle fc{Cycle::unit(n, start), {start}};
  std::vector<Int> zdot(n);
  for (std::size_t v = 0; v < n; ++v) zdot[v] = g.form(v, start);
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < n; ++v)
      if (zdot[v] > 0) candidates.push_back(v);
    if (candidates.empty()) break;
    const std::size_t v = choose(candidates);
    fc.z += Cycle::unit(n, v);
    fc.sequence.push_back(v);
    for (std::size_t u = 0; u < n; ++u) zdot[u] += g.form(u, v);
  }
  return fc;
}

FundamentalCycle fundamental_cycle(const WeightedDualGraph& g) {
  return fundamental_cycle(g, 0, [](const std::vector<std::size_t>& c) { return c.front(); });
}

bool is_rational(const WeightedDualGraph& g) {
  return arithmetic_genus(g, fundamental_cycle(g).z) == 0;
}

Int multiplicity(const WeightedDualGraph& g) {
  const auto z = fundamental_cycle(g).z;
  if (arithmetic_genus(g, z) != 0) throw NotRational("multiplicity is only defined here for rational graphs");
  return -dot(g, z, z);
}

std::uint64_t max_box_candidates() {
  if (const char* env = std::getenv("SINGRAPH_MAX_BOX")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw GraphError(std::string("SINGRAPH_MAX_BOX is not a number: ") + env);
    }
  }
  return kDefaultMaxBox;
}

namespace {

void require_rational(const WeightedDualGraph& g, const Cycle& z) {
  if (arithmetic_genus(g, z) != 0) throw NotRational("graph is not rational (p_a(Z) > 0)");
}

std::uint64_t box_size(const Cycle& z) {
  std::uint64_t total = 1;
  for (Int c : z.coeffs()) {
    const auto f = static_cast<std::uint64_t>(c + 1);
    if (total > UINT64_MAX / f) return UINT64_MAX;
    total *= f;
  }
  return total;
}

// Depth-first search for a computation sequence E_v = Z_1 < ... < Z_k = d.
bool reachable_from_single_vertex(const WeightedDualGraph& g, const Cycle& d) {
  const std::size_t n = g.size();
  std::set<std::vector<Int>> seen;
  std::vector<Cycle> stack;
  for (std::size_t v : d.support()) stack.push_back(Cycle::unit(n, v));
  while (!stack.empty()) {
    Cycle c = std::move(stack.back());
    stack.pop_back();
    if (c == d) return true;
    if (!seen.insert(c.coeffs()).second) continue;
    for (std::size_t v = 0; v < n; ++v)
      if (c[v] < d[v] && dot_vertex(g, v, c) > 0) stack.push_back(c.with(v, c[v] + 1));
  }
  return false;
}

}  // namespace

bool is_part_of_computation_sequence(const WeightedDualGraph& g, const Cycle& d) {
  if (d.size() != g.size()) throw GraphError("cycle does not live on this graph");
  if (d.is_zero()) return false;
  const auto z = fundamental_cycle(g).z;
  if (!d.leq(z)) return false;
  if (!reachable_from_single_vertex(g, d)) return false;
  // continue upward with Laufer steps; a sequence through d must end at Z
  Cycle c = d;
  for (;;) {
    std::size_t pick = g.size();
    for (std::size_t v = 0; v < g.size(); ++v)
      if (dot_vertex(g, v, c) > 0) {
        pick = v;
        break;
      }
    if (pick == g.size()) break;
    c = c.with(pick, c[pick] + 1);
  }
  return c == z;
}

std::vector<Cycle> positive_roots(const WeightedDualGraph& g) {
  const auto z = fundamental_cycle(g).z;
  require_rational(g, z);
  const std::uint64_t box = box_size(z);
  const std::uint64_t limit = max_box_candidates();
  if (box > limit)
    throw GuardExceeded("root enumeration box has " + std::to_string(box) + " candidates, above the limit of " +
                        std::to_string(limit) + " (set SINGRAPH_MAX_BOX to raise it)");
  const std::size_t n = g.size();
  std::vector<Cycle> roots;
  std::vector<Int> c(n, 0);
  // odometer with the last coordinate fastest gives lexicographic order
  for (;;) {
    Cycle d(c);
    if (d.is_positive() && arithmetic_genus(g, d) == 0) {
      if (!is_part_of_computation_sequence(g, d))
        throw Error("positive root is not part of a computation sequence; the two characterisations disagree");
      roots.push_back(std::move(d));
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c[i] < z[i]) {
        ++c[i];
        break;
      }
      c[i] = 0;
      if (i == 0) return roots;
    }
    if (n == 0) return roots;
  }
}

bool is_almost_reduced(const WeightedDualGraph& g, const Cycle& d) {
  if (d.size() != g.size()) throw GraphError("cycle does not live on this graph");
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.weight(v) < -2 && d[v] > 1) return false;
  return true;
}

Int obstruction_number(const WeightedDualGraph& g, const Cycle& d) {
  if (d.is_zero()) throw GraphError("obstruction number needs a positive cycle");
  return canonical_dot(g, d - d.reduced());
}

std::vector<WeightedDualGraph> blow_up_decomposition(const WeightedDualGraph& g) {
  const auto z = fundamental_cycle(g).z;
  require_rational(g, z);
  std::vector<std::size_t> flat;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (dot_vertex(g, v, z) == 0) flat.push_back(v);
  if (flat.empty()) return {};
  return component_graphs(subgraph(g, flat));
}

namespace {

void profile_into(const WeightedDualGraph& g, int depth, std::vector<ProfileEntry>& out) {
  if (depth > kMaxProfileDepth) throw GuardExceeded("blow-up recursion deeper than 64 levels");
  out.push_back({multiplicity(g), depth});
  // each part has strictly fewer vertices since Z.Z < 0
  for (const auto& part : blow_up_decomposition(g)) profile_into(part, depth + 1, out);
}

}  // namespace

std::vector<ProfileEntry> resolution_profile(const WeightedDualGraph& g) {
  std::vector<ProfileEntry> out;
  profile_into(g, 0, out);
  return out;
}

std::size_t quadruple_point_count(const WeightedDualGraph& g) {
  std::size_t n = 0;
  for (const auto& e : resolution_profile(g))
    if (e.multiplicity == 4) ++n;
  return n;
}

}  // namespace singraph
