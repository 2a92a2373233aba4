#include "hvc/baseline.hpp"

#include <algorithm>

#include "hvc/errors.hpp"
#include "hvc/exact.hpp"

namespace hvc {

Cover greedy_matching_cover(const Hypergraph& h) {
  std::vector<int> vertices;
  for (const Edge& e : greedy_disjoint_edges(h))
    vertices.insert(vertices.end(), e.begin(), e.end());
  return Cover{canonical_vertex_set(vertices, h.vertex_count())};
}

std::optional<Cover> exhaustive_large_cover_check(const Hypergraph& h, int j) {
  const int n = h.vertex_count();
  const int k = h.edge_size();
  if (j < k - 1)
    throw InputError("exhaustive check needs j >= k-1, got j = " + std::to_string(j));
  // Sizes n-i grow as i shrinks, so scanning i = j, j-1, ..., k-1 and
  // returning the first hit yields the smallest cover over the tested sizes.
  for (int i = std::min(j, n); i >= std::max(k - 1, 0); --i) {
    int size = n - i;
    std::vector<int> subset(size);
    for (int s = 0; s < size; ++s) subset[s] = s;
    for (;;) {
      if (h.is_cover(subset)) return Cover{subset};
      int pos = size - 1;
      while (pos >= 0 && subset[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int q = pos + 1; q < size; ++q) subset[q] = subset[q - 1] + 1;
    }
    if (size == 0) break;  // only the empty subset exists at this size
  }
  return std::nullopt;
}

Cover combine_with_seed(const Hypergraph& h, std::span<const int> seed,
                        const CombineParams& params) {
  std::vector<int> w = canonical_vertex_set(seed, h.vertex_count());
  Cover residual = greedy_matching_cover(h.uncovered_subhypergraph(w));
  std::vector<int> merged = w;
  merged.insert(merged.end(), residual.vertices.begin(), residual.vertices.end());
  Cover combined{canonical_vertex_set(merged, h.vertex_count())};
  if (params.exhaustive_check_enabled) {
    auto checked = exhaustive_large_cover_check(h, params.exhaustive_depth);
    if (checked && checked->size() < combined.size()) return *checked;
  }
  return combined;
}

}  // namespace hvc
