#include "singraph/classify.hpp"

#include <algorithm>

#include "singraph/cycle_algebra.hpp"

namespace singraph {

std::string to_string(LauferTag tag) {
  switch (tag) {
    case LauferTag::I_II: return "I/II";
    case LauferTag::III_1: return "III.1";
    case LauferTag::III_2: return "III.2";
    case LauferTag::III_3: return "III.3";
    case LauferTag::III_4: return "III.4";
    case LauferTag::III_5: return "III.5";
    case LauferTag::III_6: return "III.6";
    case LauferTag::III_7: return "III.7";
    case LauferTag::III_8: return "III.8";
    case LauferTag::III_9: return "III.9";
    case LauferTag::None: return "none";
  }
  return "none";
}

std::string to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::RDP: return "RDP";
    case BaseKind::RTP: return "RTP";
    case BaseKind::None: return "none";
  }
  return "none";
}

std::string to_string(ConfiningType type) {
  switch (type) {
    case ConfiningType::E6: return "~E6";
    case ConfiningType::E7: return "~E7";
    case ConfiningType::E8: return "~E8";
  }
  return "?";
}

std::string to_string(NonsimpleWitness::Kind kind) {
  switch (kind) {
    case NonsimpleWitness::Kind::HighValencyStar: return "HighValencyStar";
    case NonsimpleWitness::Kind::TwoTripleMerge: return "TwoTripleMerge";
    case NonsimpleWitness::Kind::ConfiningSubgraph: return "ConfiningSubgraph";
  }
  return "?";
}

namespace {

// Slot kinds of the table drawings.
enum class Slot { Dot, Square, Minus2 };

bool accepts(Slot s, Int w) {
  switch (s) {
    case Slot::Dot: return w <= -2;
    case Slot::Square: return w <= -3;
    case Slot::Minus2: return w == -2;
  }
  return false;
}

// An arm is a fixed prefix of slots, optionally followed by a chain of at
// least `min_tail` further dots.
struct ArmPattern {
  std::vector<Slot> prefix;
  bool open_tail = false;
  std::size_t min_tail = 0;
};

struct Template {
  LauferTag tag;
  Slot center;
  std::array<ArmPattern, 3> arms;
};

using S = Slot;

ArmPattern exact(std::vector<Slot> p) { return {std::move(p), false, 0}; }
ArmPattern open(std::vector<Slot> p, std::size_t min_tail) { return {std::move(p), true, min_tail}; }

const std::vector<Template>& star_templates() {
  static const std::vector<Template> t = {
      {LauferTag::III_1, S::Square, {open({}, 1), open({}, 1), open({}, 1)}},
      {LauferTag::III_2, S::Minus2, {exact({S::Dot}), exact({S::Dot}), open({}, 1)}},
      {LauferTag::III_3, S::Minus2, {open({S::Square}, 1), open({S::Dot}, 1), exact({S::Dot})}},
      {LauferTag::III_4, S::Minus2, {exact({S::Minus2, S::Dot}), open({S::Minus2}, 1), exact({S::Square})}},
      {LauferTag::III_5, S::Minus2, {exact({S::Minus2, S::Dot}), exact({S::Minus2}), open({S::Minus2, S::Square}, 1)}},
      {LauferTag::III_6, S::Minus2,
       {exact({S::Minus2, S::Dot}), exact({S::Minus2}), open({S::Minus2, S::Minus2, S::Square}, 1)}},
      {LauferTag::III_7, S::Minus2, {exact({S::Minus2, S::Dot}), exact({S::Minus2}), exact({S::Minus2, S::Dot})}},
      {LauferTag::III_8, S::Minus2,
       {exact({S::Minus2, S::Dot}), exact({S::Minus2}), exact({S::Minus2, S::Minus2, S::Dot})}},
      {LauferTag::III_9, S::Minus2,
       {exact({S::Minus2, S::Dot}), exact({S::Minus2}), exact({S::Minus2, S::Minus2, S::Minus2, S::Dot})}},
  };
  return t;
}

bool arm_matches(const WeightedDualGraph& g, const std::vector<std::size_t>& arm, const ArmPattern& p) {
  if (arm.size() < p.prefix.size()) return false;
  if (!p.open_tail && arm.size() != p.prefix.size()) return false;
  if (p.open_tail && arm.size() < p.prefix.size() + p.min_tail) return false;
  for (std::size_t i = 0; i < arm.size(); ++i) {
    const Slot s = i < p.prefix.size() ? p.prefix[i] : Slot::Dot;
    if (!accepts(s, g.weight(arm[i]))) return false;
  }
  return true;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

SlotAssignment witness_for(const StarShape& s, const std::array<int, 3>& perm) {
  SlotAssignment w{{"center", s.center}};
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& arm = s.arms[static_cast<std::size_t>(perm[a])];
    for (std::size_t i = 0; i < arm.size(); ++i)
      w.emplace_back("arm" + std::to_string(a + 1) + "[" + std::to_string(i) + "]", arm[i]);
  }
  return w;
}

std::optional<SlotAssignment> match_template(const WeightedDualGraph& g, const StarShape& s, const Template& t) {
  if (!accepts(t.center, g.weight(s.center))) return std::nullopt;
  for (const auto& perm : kPermutations) {
    bool ok = true;
    for (std::size_t a = 0; a < 3 && ok; ++a) ok = arm_matches(g, s.arms[static_cast<std::size_t>(perm[a])], t.arms[a]);
    if (ok) return witness_for(s, perm);
  }
  return std::nullopt;
}

void require_minimal_connected(const WeightedDualGraph& g) {
  if (g.empty()) throw GraphError("empty graph");
  if (!g.is_minimal()) throw GraphError("graph is not minimal (some weight is -1)");
  if (!g.is_connected()) throw GraphError("graph is not connected");
}

bool is_chain(const WeightedDualGraph& g) {
  if (!g.is_tree()) return false;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.valency(v) > 2) return false;
  return true;
}

SlotAssignment chain_witness(const WeightedDualGraph& g) {
  SlotAssignment w;
  if (g.size() == 1) return {{"chain[0]", 0}};
  std::size_t start = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.valency(v) == 1) {
      start = v;
      break;
    }
  std::size_t prev = g.size(), cur = start;
  for (std::size_t i = 0; i < g.size(); ++i) {
    w.emplace_back("chain[" + std::to_string(i) + "]", cur);
    std::size_t next = g.size();
    for (std::size_t u : g.neighbors(cur))
      if (u != prev) next = u;
    prev = cur;
    cur = next;
    if (cur == g.size()) break;
  }
  return w;
}

}  // namespace

std::optional<StarShape> star_shape(const WeightedDualGraph& g) {
  if (!g.is_tree()) return std::nullopt;
  std::optional<std::size_t> center;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::size_t val = g.valency(v);
    if (val > 3) return std::nullopt;
    if (val == 3) {
      if (center) return std::nullopt;
      center = v;
    }
  }
  if (!center) return std::nullopt;
  StarShape s{*center, {}};
  const auto nb = g.neighbors(*center);
  for (std::size_t a = 0; a < 3; ++a) {
    std::size_t prev = *center, cur = nb[a];
    for (;;) {
      s.arms[a].push_back(cur);
      std::size_t next = g.size();
      for (std::size_t u : g.neighbors(cur))
        if (u != prev) next = u;
      if (next == g.size()) break;
      prev = cur;
      cur = next;
    }
  }
  return s;
}

std::vector<LauferTag> matching_laufer_tags(const WeightedDualGraph& g) {
  require_minimal_connected(g);
  std::vector<LauferTag> out;
  if (is_chain(g)) out.push_back(LauferTag::I_II);
  if (auto s = star_shape(g))
    for (const auto& t : star_templates())
      if (match_template(g, *s, t)) out.push_back(t.tag);
  return out;
}

LauferType laufer_type(const WeightedDualGraph& g) {
  require_minimal_connected(g);
  if (is_chain(g)) return {LauferTag::I_II, chain_witness(g)};
  if (auto s = star_shape(g))
    for (const auto& t : star_templates())
      if (auto w = match_template(g, *s, t)) return {t.tag, std::move(*w)};
  return {};
}

bool is_rdp(const WeightedDualGraph& g) {
  if (g.empty() || !g.is_connected()) return false;
  if (!std::all_of(g.weights().begin(), g.weights().end(), [](Int w) { return w == -2; })) return false;
  return is_negative_definite(g);
}

bool is_rtp(const WeightedDualGraph& g) {
  if (g.empty() || !g.is_minimal() || !g.is_connected() || !is_negative_definite(g)) return false;
  if (!is_rational(g)) return false;
  return multiplicity(g) == 3;
}

namespace {

ObtainableVerdict search_rtp(const WeightedDualGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.weight(v) > -3) continue;
    std::vector<Int> w(g.size(), -2);
    w[v] = -3;
    if (is_rtp(g.with_weights(w))) return {BaseKind::RTP, std::move(w)};
  }
  return {};
}

void require_rational_minimal(const WeightedDualGraph& g) {
  require_minimal_connected(g);
  if (!is_rational(g)) throw NotRational("graph is not rational");
}

}  // namespace

ObtainableVerdict obtainable_from_base(const WeightedDualGraph& g) {
  require_rational_minimal(g);
  std::vector<Int> flat(g.size(), -2);
  if (is_rdp(g.with_weights(flat))) return {BaseKind::RDP, std::move(flat)};
  return search_rtp(g);
}

ObtainableVerdict obtainable_from_rtp(const WeightedDualGraph& g) {
  require_rational_minimal(g);
  return search_rtp(g);
}

bool is_conjecturally_simple(const WeightedDualGraph& g) {
  require_minimal_connected(g);
  if (!is_negative_definite(g)) throw NotNegativeDefinite("intersection form is not negative definite");
  if (!is_rational(g)) return false;
  return obtainable_from_base(g).kind != BaseKind::None;
}

std::vector<std::size_t> ConfiningMatch::vertices() const {
  std::vector<std::size_t> out{center};
  for (const auto& arm : arms) out.insert(out.end(), arm.begin(), arm.end());
  return out;
}

namespace {

struct ConfiningTemplate {
  ConfiningType type;
  std::array<std::vector<Slot>, 3> arms;  // prefixes the graph's arms must start with
};

const std::vector<ConfiningTemplate>& confining_templates() {
  static const std::vector<ConfiningTemplate> t = {
      {ConfiningType::E6, {{{S::Dot, S::Dot}, {S::Dot, S::Dot}, {S::Dot, S::Dot}}}},
      {ConfiningType::E7, {{{S::Dot}, {S::Minus2, S::Dot, S::Dot}, {S::Minus2, S::Dot, S::Dot}}}},
      {ConfiningType::E8, {{{S::Minus2}, {S::Minus2, S::Dot}, {S::Minus2, S::Minus2, S::Minus2, S::Dot, S::Dot}}}},
  };
  return t;
}

bool arm_starts_with(const WeightedDualGraph& g, const std::vector<std::size_t>& arm, const std::vector<Slot>& p) {
  if (arm.size() < p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!accepts(p[i], g.weight(arm[i]))) return false;
  return true;
}

std::optional<std::size_t> high_valency_vertex(const WeightedDualGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.neighbors(v).size() >= 4) return v;
  return std::nullopt;
}

// Two branch vertices joined by a chain of valency-2 vertices.
std::optional<std::vector<std::size_t>> branch_pair_path(const WeightedDualGraph& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g.neighbors(a).size() < 3) continue;
    for (std::size_t first : g.neighbors(a)) {
      std::vector<std::size_t> path{a};
      std::size_t prev = a, cur = first;
      for (;;) {
        path.push_back(cur);
        const auto nb = g.neighbors(cur);
        if (nb.size() >= 3) return path;
        if (nb.size() != 2) break;
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        if (next == a) break;
        prev = cur;
        cur = next;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConfiningMatch> find_confining_subgraph(const WeightedDualGraph& g) {
  const auto s = star_shape(g);
  if (!s || g.weight(s->center) != -2) return std::nullopt;
  for (const auto& t : confining_templates())
    for (const auto& perm : kPermutations) {
      bool ok = true;
      for (std::size_t a = 0; a < 3 && ok; ++a)
        ok = arm_starts_with(g, s->arms[static_cast<std::size_t>(perm[a])], t.arms[a]);
      if (!ok) continue;
      ConfiningMatch m{t.type, s->center, {}};
      for (std::size_t a = 0; a < 3; ++a) {
        const auto& arm = s->arms[static_cast<std::size_t>(perm[a])];
        m.arms[a].assign(arm.begin(), arm.begin() + static_cast<std::ptrdiff_t>(t.arms[a].size()));
      }
      return m;
    }
  return std::nullopt;
}

NonsimpleWitness nonsimple_witness(const WeightedDualGraph& g) {
  if (obtainable_from_base(g).kind != BaseKind::None)
    throw GraphError("graph is obtainable from a double or triple point; no non-simple witness exists");
  if (auto v = high_valency_vertex(g)) return {NonsimpleWitness::Kind::HighValencyStar, *v, {}, std::nullopt};
  if (auto p = branch_pair_path(g)) return {NonsimpleWitness::Kind::TwoTripleMerge, 0, std::move(*p), std::nullopt};
  if (auto m = find_confining_subgraph(g)) return {NonsimpleWitness::Kind::ConfiningSubgraph, m->center, {}, m};
  throw Error("no non-simple witness found for a non-obtainable rational graph");
}

namespace {

// Injective, weight-preserving map of `pattern` onto an induced subgraph of g.
bool contains_induced(const WeightedDualGraph& g, const WeightedDualGraph& pattern) {
  const std::size_t k = pattern.size();
  std::vector<std::size_t> image(k);
  std::vector<bool> used(g.size(), false);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (used[v] || g.weight(v) != pattern.weight(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = g.mult(v, image[j]) == pattern.mult(i, j);
      if (!ok) continue;
      used[v] = true;
      image[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(place, 0);
}

WeightedDualGraph d4_graph() {
  return WeightedDualGraph({{"c", -2}, {"x", -2}, {"y", -2}, {"z", -2}}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
}

// Five (-2)-curves in a chain with a (-3) below the middle one.
WeightedDualGraph forbidden_graph() {
  return WeightedDualGraph({{"c", -2}, {"x1", -2}, {"x2", -2}, {"y1", -2}, {"y2", -2}, {"t", -3}},
                           {{"c", "x1"}, {"x1", "x2"}, {"c", "y1"}, {"y1", "y2"}, {"c", "t"}});
}

}  // namespace

bool sandwich_obstruction(const WeightedDualGraph& g) {
  const auto z = fundamental_cycle(g).z;
  if (arithmetic_genus(g, z) != 0) throw NotRational("graph is not rational");
  if (contains_induced(g, d4_graph()) || contains_induced(g, forbidden_graph())) return true;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (z[v] == 1 && dot_vertex(g, v, z) < 0) return false;
  return true;
}

}  // namespace singraph
