#pragma once

#include <span>
#include <string>
#include <vector>

#include "hvc/rational.hpp"

namespace hvc {

/// A hyperedge: k distinct vertex ids in ascending order.
using Edge = std::vector<int>;

/// A vertex subset claimed to hit every edge; vertices sorted ascending.
struct Cover {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cover& other) const { return vertices == other.vertices; }
  /// Orders by size first, then lexicographically; used for deterministic
  /// tie-breaking when reducing over candidate covers.
  bool operator<(const Cover& other) const {
    if (vertices.size() != other.vertices.size())
      return vertices.size() < other.vertices.size();
    return vertices < other.vertices;
  }
};

/// Density and degree statistics of a hypergraph at a given level ell.
struct DensityReport {
  int ell = 0;
  Rational epsilon_star;   // min over ell-subsets S of d(S) / C(n-ell, k-ell)
  Rational avg_degree;     // m*k/n
  long long max_degree = 0;
  bool is_regular = false;
  double subdense_score = 0.0;  // avg_degree * ln(n) / n^(k-1)
  /// An ell-subset attaining epsilon_star (empty for ell = 0).
  std::vector<int> witness;
};

class Hypergraph;

/// A derived hypergraph whose vertices were renumbered to a dense range.
/// to_parent[new_id] gives the id in the hypergraph it was derived from.
struct MappedSubhypergraph {
  Hypergraph graph;
  std::vector<int> to_parent;
};

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored in canonical form: each edge sorted ascending, the edge
/// list sorted lexicographically, no duplicates. Membership tests are
/// binary searches on that list. All operations are pure; values are safe
/// to share across threads.
class Hypergraph {
 public:
  enum class Duplicates { kReject, kCollapse };

  /// Validates ranges, arity and (under kReject) uniqueness.
  /// Edgeless hypergraphs with k > n are permitted; they arise as
  /// intermediate results of vertex removal.
  Hypergraph(int vertex_count, int edge_size, std::vector<Edge> edges,
             Duplicates policy = Duplicates::kReject);

  int vertex_count() const { return n_; }
  int edge_size() const { return k_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(const Edge& sorted_edge) const;

  /// Number of edges containing v.
  long long degree(int v) const;
  /// Number of edges containing every vertex of S; |S| must be <= k.
  long long set_degree(std::span<const int> s) const;
  long long max_degree() const { return max_degree_; }
  Rational avg_degree() const;

  /// Scans every ell-subset for the minimum normalized set degree.
  DensityReport density_report(int ell) const;

  /// True iff every edge intersects the given set.
  bool is_cover(std::span<const int> candidate) const;

  /// Same vertex universe, only the edges disjoint from w.
  Hypergraph uncovered_subhypergraph(std::span<const int> w) const;

  /// The (k-1)-uniform hypergraph {e - {v} : v in e} on the remaining
  /// n-1 vertices, renumbered densely. Requires k >= 2.
  MappedSubhypergraph link(int v) const;

  /// The (k-|S|)-uniform hypergraph of edges containing S, restricted to
  /// the other vertices and renumbered. Requires |S| < k.
  MappedSubhypergraph link_of_set(std::span<const int> s) const;

  /// Removes the given vertices and every edge touching them; survivors
  /// are renumbered densely.
  MappedSubhypergraph remove_vertices(std::span<const int> w) const;

 private:
  void check_vertex(int v) const;

  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<long long> degrees_;
  long long max_degree_ = 0;
};

/// Canonicalizes a vertex list: sorts, removes duplicates, checks range.
std::vector<int> canonical_vertex_set(std::span<const int> vertices, int vertex_count);

}  // namespace hvc
