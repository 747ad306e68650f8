#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glrank/graph.hpp"

namespace glrank {

inline constexpr std::size_t kDefaultBruteForceOrder = 15;
inline constexpr std::size_t kDefaultCliqueNodeBudget = 1'000'000;

/// Smallest d such that every subgraph has a vertex of degree <= d
/// (maximum minimum-degree seen during min-degree elimination).
std::size_t degeneracy(const Graph& g);

/// The min-degree elimination order used by degeneracy().
std::vector<std::size_t> degeneracy_order(const Graph& g);

std::size_t max_degree(const Graph& g);

/// Fewest vertex deletions leaving a disconnected or single-vertex induced subgraph.
/// Enumerates deletion sets by increasing size; throws BudgetExceeded when order() > max_order.
std::size_t disconnection_number(const Graph& g, std::size_t max_order = kDefaultBruteForceOrder);

/// Maximum disconnection number over all nonempty induced subgraphs.
std::size_t subgraph_connectivity(const Graph& g, std::size_t max_order = kDefaultBruteForceOrder);

/// Branch-and-bound with greedy-colouring bounds; throws BudgetExceeded after node_budget nodes.
std::size_t clique_number(const Graph& g, std::size_t node_budget = kDefaultCliqueNodeBudget);

/// Maximum cardinality search followed by a perfect-elimination-ordering test.
bool is_chordal(const Graph& g);

struct InvariantBudget {
  std::size_t max_brute_force_order = kDefaultBruteForceOrder;
  std::size_t clique_node_budget = kDefaultCliqueNodeBudget;
};

/// Exponential fields are empty when their budget was exceeded; the reason is in budget_notes.
struct GraphInvariants {
  std::size_t degeneracy = 0;
  std::optional<std::size_t> disconnection;
  std::optional<std::size_t> subgraph_connectivity;
  std::size_t max_degree = 0;
  std::optional<std::size_t> clique_number;
  bool chordal = false;
  std::vector<std::string> budget_notes;
};

GraphInvariants invariants(const Graph& g, const InvariantBudget& budget = {});

}  // namespace glrank
