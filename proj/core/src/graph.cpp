#include "glrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "glrank/errors.hpp"

namespace glrank {

Graph::Graph(std::size_t p) : p_(p), adj_(p), dense_(p * p, 0) {}

Graph::Graph(std::size_t p, std::span<const Edge> edges) : Graph(p) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= p || e.v >= p) {
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (dense_[e.u * p + e.v]) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    dense_[e.u * p + e.v] = dense_[e.v * p + e.u] = 1;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= p_ || v >= p_) return false;
  return dense_[u * p_ + v] != 0;
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  if (!adjacent(u, v)) return std::nullopt;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> local(p_, p_);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] >= p_) throw std::invalid_argument("induced: vertex out of range");
    if (local[vertices[k]] != p_) throw std::invalid_argument("induced: repeated vertex");
    local[vertices[k]] = k;
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (local[e.u] != p_ && local[e.v] != p_) sub.push_back({local[e.u], local[e.v]});
  }
  return Graph(vertices.size(), sub);
}

std::vector<std::vector<std::size_t>> Graph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(p_, 0);
  for (std::size_t s = 0; s < p_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t w : adj_[comp[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return p_ > 0 && components().size() == 1; }

bool Graph::is_subgraph_of(const Graph& other) const {
  if (other.p_ != p_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return other.adjacent(e.u, e.v); });
}

Graph complete_graph(std::size_t p) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) e.push_back({i, j});
  return Graph(p, e);
}

Graph path_graph(std::size_t p) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < p; ++i) e.push_back({i, i + 1});
  return Graph(p, e);
}

Graph star_graph(std::size_t p) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < p; ++i) e.push_back({0, i});
  return Graph(p, e);
}

Graph cycle_graph(std::size_t p) {
  if (p < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < p; ++i) e.push_back({i, (i + 1) % p});
  return Graph(p, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph(rows * cols, e);
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back({i, m + j});
  return Graph(m + n, e);
}

Graph erdos_renyi_connected(std::size_t p, double edge_prob, std::uint64_t seed) {
  if (p == 0) throw std::invalid_argument("erdos_renyi needs p >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  for (std::size_t attempt = 0; attempt < kErdosRenyiMaxAttempts; ++attempt) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        if (coin(rng)) e.push_back({i, j});
    Graph g(p, e);
    if (g.connected()) return g;
  }
  throw BudgetExceeded("erdos_renyi: no connected graph after " + std::to_string(kErdosRenyiMaxAttempts) +
                       " attempts; edge probability too low for p=" + std::to_string(p));
}

Graph random_tree(std::size_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (std::size_t k = 1; k < p; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    e.push_back({perm[pick(rng)], perm[k]});
  }
  return Graph(p, e);
}

// Each new vertex attaches to a clique made of a random earlier vertex u plus a random
// subset of u's earlier neighbourhood (itself a clique), so the reverse insertion order
// is a perfect elimination ordering.
Graph random_chordal(std::size_t p, std::size_t max_clique, std::uint64_t seed) {
  if (max_clique < 1) throw std::invalid_argument("chordal: max_clique must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> earlier(p);
  std::vector<Edge> e;
  std::bernoulli_distribution coin(0.7);
  for (std::size_t v = 1; v < p; ++v) {
    if (max_clique == 1) break;
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    std::size_t u = pick(rng);
    std::vector<std::size_t> clique{u};
    std::vector<std::size_t> pool = earlier[u];
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t w : pool) {
      if (clique.size() + 1 >= max_clique) break;
      if (coin(rng)) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    for (std::size_t w : clique) e.push_back({w, v});
    earlier[v] = clique;
  }
  return Graph(p, e);
}

namespace {

std::size_t param(const FamilySpec& spec, std::size_t k, long min_value) {
  if (spec.params.size() <= k) {
    throw std::invalid_argument("family '" + spec.family + "' expects at least " + std::to_string(k + 1) +
                                " parameter(s)");
  }
  long v = spec.params[k];
  if (v < min_value) {
    throw std::invalid_argument("family '" + spec.family + "' parameter " + std::to_string(k + 1) +
                                " must be >= " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(v);
}

std::uint64_t need_seed(const FamilySpec& spec) {
  if (!spec.seed) throw std::invalid_argument("family '" + spec.family + "' is random and needs a seed");
  return *spec.seed;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "empty") return Graph(param(spec, 0, 1));
  if (f == "path") return path_graph(param(spec, 0, 1));
  if (f == "star") return star_graph(param(spec, 0, 1));
  if (f == "cycle" || f == "circular") return cycle_graph(param(spec, 0, 3));
  if (f == "complete") return complete_graph(param(spec, 0, 1));
  if (f == "grid") return grid_graph(param(spec, 0, 1), param(spec, 1, 1));
  if (f == "complete_bipartite") return complete_bipartite_graph(param(spec, 0, 1), param(spec, 1, 1));
  if (f == "tree") return random_tree(param(spec, 0, 1), need_seed(spec));
  if (f == "chordal") return random_chordal(param(spec, 0, 1), param(spec, 1, 1), need_seed(spec));
  if (f == "erdos_renyi") {
    if (!spec.edge_prob) throw std::invalid_argument("erdos_renyi needs an edge probability");
    return erdos_renyi_connected(param(spec, 0, 1), *spec.edge_prob, need_seed(spec));
  }
  throw std::invalid_argument("unknown graph family '" + f + "'");
}

std::vector<NamedGraph> standard_catalog() {
  std::vector<NamedGraph> out;
  out.push_back({"single", Graph(1)});
  for (std::size_t p = 4; p <= 7; ++p) out.push_back({"path" + std::to_string(p), path_graph(p)});
  for (std::size_t p = 4; p <= 7; ++p) out.push_back({"star" + std::to_string(p), star_graph(p)});
  for (std::size_t p = 4; p <= 7; ++p) out.push_back({"cycle" + std::to_string(p), cycle_graph(p)});
  for (std::size_t p = 3; p <= 6; ++p) out.push_back({"complete" + std::to_string(p), complete_graph(p)});
  out.push_back({"complete_bipartite2x3", complete_bipartite_graph(2, 3)});
  out.push_back({"complete_bipartite3x3", complete_bipartite_graph(3, 3)});
  out.push_back({"complete_bipartite2x4", complete_bipartite_graph(2, 4)});
  out.push_back({"grid3x3", grid_graph(3, 3)});
  out.push_back({"grid3x4", grid_graph(3, 4)});
  return out;
}

}  // namespace glrank
