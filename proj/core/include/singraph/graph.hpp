#pragma once

// Weighted dual graphs of exceptional configurations, cycles on them and the
// elementary surgery operations (blow-up, contraction, chain merging).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singraph {

using Int = std::int64_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph data or an operation applied outside its precondition.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A computation needs a negative definite intersection form.
class NotNegativeDefinite : public Error {
 public:
  using Error::Error;
};

/// A computation needs a rational singularity graph.
class NotRational : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Checked arithmetic; throws GuardExceeded on 64-bit overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Orders ids so that embedded digit runs compare numerically ("v2" < "v10").
bool natural_less(std::string_view a, std::string_view b);

struct VertexSpec {
  std::string id;
  Int weight = -2;
};

struct EdgeSpec {
  std::string a;
  std::string b;
  Int mult = 1;
};

/// Vertex-weighted multigraph carrying the intersection form E_u.E_v of a
/// configuration of smooth rational curves.
///
/// Vertices are kept sorted by natural id order, so vertex index order is the
/// id order used for every tie-break in the library. Values are immutable;
/// every surgery operation returns a new graph.
class WeightedDualGraph {
 public:
  WeightedDualGraph() = default;
  WeightedDualGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::string& id(std::size_t v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  Int weight(std::size_t v) const { return weights_.at(v); }
  const std::vector<Int>& weights() const { return weights_; }

  /// Edge multiplicity E_u.E_v for u != v.
  Int mult(std::size_t u, std::size_t v) const { return adj_[u * size() + v]; }
  /// Full intersection form: weight on the diagonal, multiplicity elsewhere.
  Int form(std::size_t u, std::size_t v) const { return u == v ? weights_[u] : mult(u, v); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// Number of incident edges counted with multiplicity.
  std::size_t valency(std::size_t v) const;

  bool is_minimal() const;
  bool is_connected() const;
  bool is_tree() const;

  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

  /// Same graph with weights replaced; edges and ids are kept.
  WeightedDualGraph with_weights(std::vector<Int> weights) const;
  /// Id not yet used in this graph, built from `stem`.
  std::string fresh_id(std::string_view stem = "x") const;

  friend bool operator==(const WeightedDualGraph&, const WeightedDualGraph&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<Int> weights_;
  std::vector<Int> adj_;
};

/// Non-negative integer divisor sum d_v E_v on a graph's vertices.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::size_t n) : coeffs_(n, 0) {}
  explicit Cycle(std::vector<Int> coeffs);

  static Cycle unit(std::size_t n, std::size_t v);

  std::size_t size() const { return coeffs_.size(); }
  Int operator[](std::size_t v) const { return coeffs_[v]; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_positive() const { return !is_zero(); }
  bool is_reduced() const;
  Cycle reduced() const;
  std::vector<std::size_t> support() const;

  Cycle& operator+=(const Cycle& other);
  Cycle operator+(const Cycle& other) const;
  /// Throws GraphError when the difference has a negative coefficient.
  Cycle operator-(const Cycle& other) const;
  Cycle with(std::size_t v, Int value) const;

  /// Componentwise order.
  bool leq(const Cycle& other) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Int> coeffs_;
};

Int dot(const WeightedDualGraph& g, const Cycle& c, const Cycle& d);
/// E_v . D for the vertex v.
Int dot_vertex(const WeightedDualGraph& g, std::size_t v, const Cycle& d);
/// K.D via adjunction K.E_v = -w_v - 2.
Int canonical_dot(const WeightedDualGraph& g, const Cycle& d);
/// p_a(D) = 1 + D.(D+K)/2 for D > 0.
Int arithmetic_genus(const WeightedDualGraph& g, const Cycle& d);

/// Leading principal minors of the negated matrix, exact; `matrix` is row-major n x n.
bool is_negative_definite(std::span<const Int> matrix, std::size_t n);
bool is_negative_definite(const WeightedDualGraph& g);

WeightedDualGraph blow_up_smooth_point(const WeightedDualGraph& g, std::size_t v);
/// Contracts a (-1)-vertex.
WeightedDualGraph contract(const WeightedDualGraph& g, std::size_t v);
/// Replaces a chain of vertices by a single curve of class E_a + ... + E_b.
WeightedDualGraph merge_chain(const WeightedDualGraph& g, std::span<const std::size_t> path);
/// Induced subgraph; vertex ids are preserved.
WeightedDualGraph subgraph(const WeightedDualGraph& g, std::span<const std::size_t> vertices);

std::size_t valency(const WeightedDualGraph& g, std::size_t v);
/// Number of valency-1 vertices.
std::size_t ends(const WeightedDualGraph& g);

std::vector<std::vector<std::size_t>> connected_components(const WeightedDualGraph& g);
std::vector<WeightedDualGraph> component_graphs(const WeightedDualGraph& g);

/// Vertices on the unique path between two vertices of a tree, inclusive.
std::vector<std::size_t> tree_path(const WeightedDualGraph& g, std::size_t from, std::size_t to);

/// Path graph with the given weights and ids v1..vn.
WeightedDualGraph make_chain(std::span<const Int> weights);
WeightedDualGraph make_chain(std::initializer_list<Int> weights);

}  // namespace singraph
