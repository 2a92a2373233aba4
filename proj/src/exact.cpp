#include "hvc/exact.hpp"

#include <algorithm>

#include "hvc/errors.hpp"

namespace hvc {

namespace {

bool edge_covered(const Edge& e, const std::vector<char>& in_cover) {
  for (int v : e)
    if (in_cover[v]) return true;
  return false;
}

long long residual_matching_bound(const Hypergraph& h, const std::vector<char>& in_cover) {
  std::vector<char> used(h.vertex_count(), 0);
  long long count = 0;
  for (const Edge& e : h.edges()) {
    if (edge_covered(e, in_cover)) continue;
    bool disjoint = true;
    for (int v : e)
      if (used[v]) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    for (int v : e) used[v] = 1;
    ++count;
  }
  return count;
}

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& h, long long budget) : h_(h), budget_(budget) {
    std::vector<int> greedy;
    for (const Edge& e : greedy_disjoint_edges(h))
      greedy.insert(greedy.end(), e.begin(), e.end());
    best_ = canonical_vertex_set(greedy, h.vertex_count());
  }

  ExactResult run() {
    std::vector<char> in_cover(h_.vertex_count(), 0);
    std::vector<char> excluded(h_.vertex_count(), 0);
    search(in_cover, excluded, 0);
    ExactResult result;
    result.optimum = Cover{best_};
    result.optimum_size = static_cast<int>(best_.size());
    result.nodes_explored = nodes_;
    return result;
  }

  long long nodes() const { return nodes_; }

 private:
  void search(std::vector<char> in_cover, std::vector<char> excluded, int size) {
    ++nodes_;
    if (nodes_ > budget_)
      throw BudgetExceededError("exact search exceeded node budget of " +
                                    std::to_string(budget_),
                                best_, nodes_);

    // Repeatedly add vertices forced by edges whose other vertices are all
    // excluded; detect infeasible branches, and find the branching edge.
    const Edge* branch_edge = nullptr;
    bool changed = true;
    while (changed) {
      changed = false;
      branch_edge = nullptr;
      for (const Edge& e : h_.edges()) {
        if (edge_covered(e, in_cover)) continue;
        int free_count = 0;
        int free_vertex = -1;
        for (int v : e)
          if (!excluded[v]) {
            ++free_count;
            free_vertex = v;
          }
        if (free_count == 0) return;  // infeasible: every vertex of e excluded
        if (free_count == 1) {
          in_cover[free_vertex] = 1;
          ++size;
          changed = true;
        } else if (!branch_edge) {
          branch_edge = &e;
        }
      }
    }

    if (size >= static_cast<int>(best_.size())) return;
    if (!branch_edge) {  // all edges covered and size improves the incumbent
      best_.clear();
      for (int v = 0; v < h_.vertex_count(); ++v)
        if (in_cover[v]) best_.push_back(v);
      return;
    }
    if (size + residual_matching_bound(h_, in_cover) >= static_cast<int>(best_.size()))
      return;

    Edge branch = *branch_edge;
    for (int v : branch) {
      if (excluded[v]) continue;
      auto next_cover = in_cover;
      next_cover[v] = 1;
      search(std::move(next_cover), excluded, size + 1);
      excluded[v] = 1;
    }
  }

  const Hypergraph& h_;
  long long budget_;
  std::vector<int> best_;
  long long nodes_ = 0;
};

}  // namespace

std::vector<Edge> greedy_disjoint_edges(const Hypergraph& h) {
  std::vector<char> used(h.vertex_count(), 0);
  std::vector<Edge> matching;
  for (const Edge& e : h.edges()) {
    bool disjoint = true;
    for (int v : e)
      if (used[v]) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;
    for (int v : e) used[v] = 1;
    matching.push_back(e);
  }
  return matching;
}

long long matching_lower_bound(const Hypergraph& h) {
  return static_cast<long long>(greedy_disjoint_edges(h).size());
}

ExactResult exact_min_cover(const Hypergraph& h, long long node_budget) {
  return BranchAndBound(h, node_budget).run();
}

ExactResult enumerate_min_covers(const Hypergraph& h, long long node_budget) {
  if (h.vertex_count() > 64)
    throw InputError("enumerate_min_covers supports at most 64 vertices");
  ExactResult result = exact_min_cover(h, node_budget);
  const int n = h.vertex_count();
  const int opt = result.optimum_size;

  std::vector<uint64_t> edge_masks;
  edge_masks.reserve(h.edges().size());
  for (const Edge& e : h.edges()) {
    uint64_t mask = 0;
    for (int v : e) mask |= uint64_t{1} << v;
    edge_masks.push_back(mask);
  }

  std::vector<Cover> covers;
  std::vector<int> subset(opt);
  for (int i = 0; i < opt; ++i) subset[i] = i;
  bool done = opt > n;
  while (!done) {
    if (++result.nodes_explored > node_budget)
      throw BudgetExceededError("cover enumeration exceeded node budget of " +
                                    std::to_string(node_budget),
                                result.optimum.vertices, result.nodes_explored);
    uint64_t mask = 0;
    for (int v : subset) mask |= uint64_t{1} << v;
    bool is_cover = true;
    for (uint64_t em : edge_masks)
      if (!(em & mask)) {
        is_cover = false;
        break;
      }
    if (is_cover) covers.push_back(Cover{subset});

    if (opt == 0) break;
    int i = opt - 1;
    while (i >= 0 && subset[i] == n - opt + i) --i;
    if (i < 0) {
      done = true;
    } else {
      ++subset[i];
      for (int j = i + 1; j < opt; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  result.all_min_covers = std::move(covers);
  return result;
}

}  // namespace hvc
