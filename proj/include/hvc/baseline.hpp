#pragma once

#include <optional>
#include <span>

#include "hvc/hypergraph.hpp"
#include "hvc/rational.hpp"

namespace hvc {

/// Knobs for combine_with_seed. `assumed_seed_fraction` is the assumed
/// fraction of the seed that lies inside a minimum cover; it is carried
/// for reporting only and does not influence the algorithm.
struct CombineParams {
  int exhaustive_depth = 0;  // j; must be >= k-1 when the check is enabled
  Rational assumed_seed_fraction = Rational(1);  // delta in [0, 1]
  bool exhaustive_check_enabled = false;
};

/// Union of the vertices of a greedy maximal disjoint edge set. Every
/// cover needs one vertex per disjoint edge, so the result is at most
/// k times the optimum. Empty edge set yields the empty cover.
Cover greedy_matching_cover(const Hypergraph& h);

/// For i = j down to k-1, tests every subset of size n-i and returns the
/// first (smallest, lexicographically least) one that is a cover. Cost
/// grows like n^j; meant for small j only.
std::optional<Cover> exhaustive_large_cover_check(const Hypergraph& h, int j);

/// Completes a seed set into a full cover: the seed plus a greedy cover of
/// the edges the seed misses. When the seed lies inside some minimum
/// cover, the result has at most k*OPT - (k-1)*|seed| vertices. With the
/// exhaustive check enabled, returns the smaller of the two covers.
Cover combine_with_seed(const Hypergraph& h, std::span<const int> seed,
                        const CombineParams& params = {});

}  // namespace hvc
