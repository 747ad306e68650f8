#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace glrank {

/// Undirected edge stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..p-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t p);
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or duplicates.
  Graph(std::size_t p, std::span<const Edge> edges);

  std::size_t order() const noexcept { return p_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Index of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

  /// Induced subgraph; vertex k of the result is vertices[k].
  Graph induced(std::span<const std::size_t> vertices) const;
  /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const;
  /// True when every edge of *this is an edge of `other` (same vertex count).
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.p_ == b.p_ && a.edges_ == b.edges_; }

 private:
  std::size_t p_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::uint8_t> dense_;
};

/// Named family plus parameters, as accepted by generate().
///
/// Families and params:
///   empty [p], path [p], star [p], cycle|circular [p], complete [p],
///   grid [rows, cols], complete_bipartite [m, n],
///   tree [p] (uniform random attachment; needs seed),
///   chordal [p, max_clique] (random perfect elimination construction; needs seed),
///   erdos_renyi [p] (needs seed and edge_prob; conditioned on connectivity).
struct FamilySpec {
  std::string family;
  std::vector<long> params;
  std::optional<double> edge_prob;
  std::optional<std::uint64_t> seed;
};

inline constexpr std::size_t kErdosRenyiMaxAttempts = 100000;

/// Throws std::invalid_argument for unknown families or bad params, BudgetExceeded when
/// Erdős–Rényi rejection sampling exhausts kErdosRenyiMaxAttempts.
Graph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t p);
Graph path_graph(std::size_t p);
Graph star_graph(std::size_t p);
Graph cycle_graph(std::size_t p);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);
Graph erdos_renyi_connected(std::size_t p, double edge_prob, std::uint64_t seed);
Graph random_tree(std::size_t p, std::uint64_t seed);
Graph random_chordal(std::size_t p, std::size_t max_clique, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small named graphs covering every family with known exact ranks.
std::vector<NamedGraph> standard_catalog();

}  // namespace glrank
