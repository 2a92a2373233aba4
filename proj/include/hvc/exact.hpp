#pragma once

#include <optional>
#include <vector>

#include "hvc/hypergraph.hpp"

namespace hvc {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

struct ExactResult {
  Cover optimum;
  int optimum_size = 0;
  long long nodes_explored = 0;
  /// Present only when enumeration was requested: every cover of minimum
  /// size, sorted, no duplicates.
  std::optional<std::vector<Cover>> all_min_covers;
};

/// Maximal set of pairwise-disjoint edges, greedily collected by scanning
/// the canonical (lexicographically sorted) edge list. Deterministic.
std::vector<Edge> greedy_disjoint_edges(const Hypergraph& h);

/// Size of the greedy disjoint-edge set. Any cover needs a distinct vertex
/// per disjoint edge, so this certifies optimum >= value.
long long matching_lower_bound(const Hypergraph& h);

/// Minimum vertex cover by branch and bound: branch on the vertices of the
/// lexicographically smallest uncovered edge in ascending order (left
/// branches exclude the earlier vertices, and edges reduced to a single
/// admissible vertex force it), prune with the greedy disjoint-edge lower
/// bound on the residual hypergraph. Deterministic given h.
/// Throws BudgetExceededError carrying the best incumbent if the node
/// budget runs out.
ExactResult exact_min_cover(const Hypergraph& h, long long node_budget = kDefaultNodeBudget);

/// exact_min_cover plus exhaustive enumeration of every minimum cover.
/// Intended for small instances (n <= 64 supported; n <= ~16 practical).
ExactResult enumerate_min_covers(const Hypergraph& h, long long node_budget = kDefaultNodeBudget);

}  // namespace hvc
