#include "glrank/graph_invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "glrank/errors.hpp"

namespace glrank {

namespace {

using Mask = std::uint32_t;

void check_order(const Graph& g, std::size_t max_order, const char* what) {
  if (g.order() > max_order || g.order() > 31) {
    throw BudgetExceeded(std::string(what) + ": p=" + std::to_string(g.order()) +
                         " exceeds brute-force budget p<=" + std::to_string(std::min<std::size_t>(max_order, 31)));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// A vertex set is "splittable" when the induced subgraph is a single vertex or disconnected.
bool splittable(Mask s, const std::vector<Mask>& adj) {
  if (s == 0) return false;
  if (std::popcount(s) == 1) return true;
  Mask reached = s & (~s + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached != s;
}

}  // namespace

std::vector<std::size_t> degeneracy_order(const Graph& g) {
  const std::size_t p = g.order();
  std::vector<std::size_t> deg(p);
  std::vector<char> removed(p, 0);
  for (std::size_t v = 0; v < p; ++v) deg[v] = g.degree(v);
  std::vector<std::size_t> order;
  order.reserve(p);
  for (std::size_t step = 0; step < p; ++step) {
    std::size_t best = p;
    for (std::size_t v = 0; v < p; ++v) {
      if (!removed[v] && (best == p || deg[v] < deg[best])) best = v;
    }
    removed[best] = 1;
    order.push_back(best);
    for (std::size_t w : g.neighbors(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  return order;
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t p = g.order();
  std::vector<std::size_t> deg(p);
  std::vector<char> removed(p, 0);
  for (std::size_t v = 0; v < p; ++v) deg[v] = g.degree(v);
  std::size_t result = 0;
  for (std::size_t v : degeneracy_order(g)) {
    result = std::max(result, deg[v]);
    removed[v] = 1;
    for (std::size_t w : g.neighbors(v)) {
      if (!removed[w]) --deg[w];
    }
  }
  return result;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::size_t disconnection_number(const Graph& g, std::size_t max_order) {
  check_order(g, max_order, "disconnection_number");
  const std::size_t p = g.order();
  if (p <= 1) return 0;
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << p) - 1;
  for (std::size_t k = 0; k < p; ++k) {
    // Gosper's hack over deletion sets of size k.
    Mask del = (Mask{1} << k) - 1;
    while (true) {
      if (splittable(all & ~del, adj)) return k;
      if (k == 0) break;
      Mask c = del & (~del + 1);
      Mask r = del + c;
      if (r > all) break;
      del = (((r ^ del) >> 2) / c) | r;
      if (del > all) break;
    }
  }
  return p - 1;
}

std::size_t subgraph_connectivity(const Graph& g, std::size_t max_order) {
  check_order(g, max_order, "subgraph_connectivity");
  const std::size_t p = g.order();
  if (p == 0) return 0;
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << p) - 1;
  // largest[s] = size of the largest splittable subset of s; kappa(G[s]) = |s| - largest[s].
  std::vector<std::uint8_t> largest(std::size_t{full} + 1, 0);
  std::size_t best = 0;
  for (Mask s = 1; s <= full; ++s) {
    const auto size = static_cast<std::uint8_t>(std::popcount(s));
    if (splittable(s, adj)) {
      largest[s] = size;
    } else {
      std::uint8_t m = 0;
      for (Mask t = s; t; t &= t - 1) m = std::max(m, largest[s & ~(t & (~t + 1))]);
      largest[s] = m;
    }
    best = std::max<std::size_t>(best, size - largest[s]);
    if (s == full) break;
  }
  return best;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::size_t budget;
  std::size_t nodes = 0;
  std::size_t best = 0;

  // Greedy colouring of candidates; colour classes give an upper bound per prefix.
  void colour_sort(std::vector<std::size_t>& cand, std::vector<std::size_t>& bound) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = std::any_of(cls.begin(), cls.end(), [&](std::size_t w) { return g.adjacent(v, w); });
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    cand.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t v : classes[c]) {
        cand.push_back(v);
        bound.push_back(c + 1);
      }
    }
  }

  void expand(std::size_t depth, std::vector<std::size_t> cand) {
    if (++nodes > budget) {
      throw BudgetExceeded("clique_number: branch-and-bound exceeded " + std::to_string(budget) + " nodes");
    }
    std::vector<std::size_t> bound;
    colour_sort(cand, bound);
    while (!cand.empty()) {
      if (depth + bound.back() <= best) return;
      std::size_t v = cand.back();
      cand.pop_back();
      bound.pop_back();
      std::vector<std::size_t> next;
      for (std::size_t w : cand)
        if (g.adjacent(v, w)) next.push_back(w);
      if (next.empty()) {
        best = std::max(best, depth + 1);
      } else {
        expand(depth + 1, std::move(next));
      }
    }
  }
};

}  // namespace

std::size_t clique_number(const Graph& g, std::size_t node_budget) {
  if (g.order() == 0) return 0;
  CliqueSearch search{g, node_budget};
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  search.best = 1;
  search.expand(0, all);
  return search.best;
}

bool is_chordal(const Graph& g) {
  const std::size_t p = g.order();
  // Maximum cardinality search; numbering runs from p-1 down to 0.
  std::vector<std::size_t> weight(p, 0), position(p, p), order(p);
  for (std::size_t k = p; k-- > 0;) {
    std::size_t pick = p;
    for (std::size_t v = 0; v < p; ++v) {
      if (position[v] == p && (pick == p || weight[v] > weight[pick])) pick = v;
    }
    position[pick] = k;
    order[k] = pick;
    for (std::size_t w : g.neighbors(pick))
      if (position[w] == p) ++weight[w];
  }
  // order[0], order[1], ... is a perfect elimination ordering iff g is chordal:
  // the later neighbours of each vertex must form a clique.
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t v = order[k];
    std::vector<std::size_t> later;
    for (std::size_t w : g.neighbors(v))
      if (position[w] > k) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

GraphInvariants invariants(const Graph& g, const InvariantBudget& budget) {
  GraphInvariants inv;
  inv.degeneracy = degeneracy(g);
  inv.max_degree = max_degree(g);
  inv.chordal = is_chordal(g);
  try {
    inv.disconnection = disconnection_number(g, budget.max_brute_force_order);
  } catch (const BudgetExceeded& e) {
    inv.budget_notes.push_back(e.what());
  }
  try {
    inv.subgraph_connectivity = subgraph_connectivity(g, budget.max_brute_force_order);
  } catch (const BudgetExceeded& e) {
    inv.budget_notes.push_back(e.what());
  }
  try {
    inv.clique_number = clique_number(g, budget.clique_node_budget);
  } catch (const BudgetExceeded& e) {
    inv.budget_notes.push_back(e.what());
  }
  return inv;
}

}  // namespace glrank
