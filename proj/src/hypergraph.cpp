#include "hvc/hypergraph.hpp"

#include <algorithm>
#include <cmath>

#include "hvc/errors.hpp"

namespace hvc {

namespace {

std::string edge_str(const Edge& e) {
  std::string s = "{";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

bool contains_sorted(const Edge& edge, std::span<const int> subset) {
  size_t i = 0;
  for (int v : subset) {
    while (i < edge.size() && edge[i] < v) ++i;
    if (i == edge.size() || edge[i] != v) return false;
    ++i;
  }
  return true;
}

}  // namespace

std::vector<int> canonical_vertex_set(std::span<const int> vertices, int vertex_count) {
  std::vector<int> out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out)
    if (v < 0 || v >= vertex_count)
      throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(vertex_count) + ")");
  return out;
}

Hypergraph::Hypergraph(int vertex_count, int edge_size, std::vector<Edge> edges,
                       Duplicates policy)
    : n_(vertex_count), k_(edge_size), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  if (k_ < 1) throw InputError("edge size must be at least 1");
  for (Edge& e : edges_) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("edge with repeated vertex: " + edge_str(e));
    if (static_cast<int>(e.size()) != k_)
      throw InputError("edge arity " + std::to_string(e.size()) + " differs from k=" +
                       std::to_string(k_) + ": " + edge_str(e));
    if (!e.empty() && (e.front() < 0 || e.back() >= n_))
      throw InputError("edge with out-of-range vertex: " + edge_str(e));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    if (policy == Duplicates::kReject)
      throw InputError("duplicate edge: " + edge_str(*dup));
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }
  degrees_.assign(n_, 0);
  for (const Edge& e : edges_)
    for (int v : e) ++degrees_[v];
  for (long long d : degrees_) max_degree_ = std::max(max_degree_, d);
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

void Hypergraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(n_) + ")");
}

long long Hypergraph::degree(int v) const {
  check_vertex(v);
  return degrees_[v];
}

long long Hypergraph::set_degree(std::span<const int> s) const {
  std::vector<int> subset = canonical_vertex_set(s, n_);
  if (static_cast<int>(subset.size()) > k_)
    throw InputError("set_degree called with |S| = " + std::to_string(subset.size()) +
                     " > k = " + std::to_string(k_));
  long long count = 0;
  for (const Edge& e : edges_)
    if (contains_sorted(e, subset)) ++count;
  return count;
}

Rational Hypergraph::avg_degree() const {
  if (n_ == 0) return Rational(0);
  return Rational(edge_count() * k_, n_);
}

DensityReport Hypergraph::density_report(int ell) const {
  if (ell < 0 || ell >= k_)
    throw InputError("ell = " + std::to_string(ell) + " outside [0, k)");
  DensityReport report;
  report.ell = ell;
  report.avg_degree = avg_degree();
  report.max_degree = max_degree_;
  long long min_degree = n_ > 0 ? degrees_[0] : 0;
  for (long long d : degrees_) min_degree = std::min(min_degree, d);
  report.is_regular = (n_ == 0) || (min_degree == max_degree_);
  if (n_ > 0 && k_ >= 2)
    report.subdense_score =
        report.avg_degree.to_double() * std::log(static_cast<double>(n_)) /
        std::pow(static_cast<double>(n_), k_ - 1);
  else if (n_ > 0)
    report.subdense_score = report.avg_degree.to_double() * std::log(static_cast<double>(n_));

  long long slots = binomial(n_ - ell, k_ - ell);
  if (slots == 0) {
    report.epsilon_star = Rational(0);
    return report;
  }
  if (ell == 0) {
    report.epsilon_star = Rational(edge_count(), slots);
    return report;
  }
  // Minimum of d(S)/C(n-ell, k-ell) over all ell-subsets S.
  std::vector<int> subset(ell);
  for (int i = 0; i < ell; ++i) subset[i] = i;
  bool first = true;
  Rational best;
  std::vector<int> best_subset;
  for (;;) {
    long long d = set_degree(subset);
    Rational value(d, slots);
    if (first || value < best) {
      best = value;
      best_subset = subset;
      first = false;
    }
    int i = ell - 1;
    while (i >= 0 && subset[i] == n_ - ell + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < ell; ++j) subset[j] = subset[j - 1] + 1;
  }
  report.epsilon_star = best;
  report.witness = best_subset;
  return report;
}

bool Hypergraph::is_cover(std::span<const int> candidate) const {
  std::vector<int> cover = canonical_vertex_set(candidate, n_);
  for (const Edge& e : edges_) {
    bool hit = false;
    for (int v : e)
      if (std::binary_search(cover.begin(), cover.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

Hypergraph Hypergraph::uncovered_subhypergraph(std::span<const int> w) const {
  std::vector<int> removed = canonical_vertex_set(w, n_);
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    bool hit = false;
    for (int v : e)
      if (std::binary_search(removed.begin(), removed.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) kept.push_back(e);
  }
  return Hypergraph(n_, k_, std::move(kept));
}

MappedSubhypergraph Hypergraph::link(int v) const {
  if (k_ < 2) throw InputError("link requires k >= 2");
  check_vertex(v);
  std::vector<int> to_parent;
  to_parent.reserve(n_ - 1);
  std::vector<int> to_new(n_, -1);
  for (int u = 0; u < n_; ++u)
    if (u != v) {
      to_new[u] = static_cast<int>(to_parent.size());
      to_parent.push_back(u);
    }
  std::vector<Edge> link_edges;
  for (const Edge& e : edges_) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    Edge image;
    image.reserve(k_ - 1);
    for (int u : e)
      if (u != v) image.push_back(to_new[u]);
    link_edges.push_back(std::move(image));
  }
  return {Hypergraph(n_ - 1, k_ - 1, std::move(link_edges), Duplicates::kCollapse),
          std::move(to_parent)};
}

MappedSubhypergraph Hypergraph::link_of_set(std::span<const int> s) const {
  std::vector<int> subset = canonical_vertex_set(s, n_);
  int ell = static_cast<int>(subset.size());
  if (ell >= k_)
    throw InputError("link_of_set requires |S| < k, got |S| = " + std::to_string(ell));
  std::vector<int> to_parent;
  to_parent.reserve(n_ - ell);
  std::vector<int> to_new(n_, -1);
  for (int u = 0; u < n_; ++u)
    if (!std::binary_search(subset.begin(), subset.end(), u)) {
      to_new[u] = static_cast<int>(to_parent.size());
      to_parent.push_back(u);
    }
  std::vector<Edge> link_edges;
  for (const Edge& e : edges_) {
    if (!contains_sorted(e, subset)) continue;
    Edge image;
    image.reserve(k_ - ell);
    for (int u : e)
      if (to_new[u] >= 0) image.push_back(to_new[u]);
    link_edges.push_back(std::move(image));
  }
  return {Hypergraph(n_ - ell, k_ - ell, std::move(link_edges), Duplicates::kCollapse),
          std::move(to_parent)};
}

MappedSubhypergraph Hypergraph::remove_vertices(std::span<const int> w) const {
  std::vector<int> removed = canonical_vertex_set(w, n_);
  std::vector<int> to_parent;
  to_parent.reserve(n_ - removed.size());
  std::vector<int> to_new(n_, -1);
  for (int u = 0; u < n_; ++u)
    if (!std::binary_search(removed.begin(), removed.end(), u)) {
      to_new[u] = static_cast<int>(to_parent.size());
      to_parent.push_back(u);
    }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    bool hit = false;
    for (int v : e)
      if (to_new[v] < 0) {
        hit = true;
        break;
      }
    if (hit) continue;
    Edge image;
    image.reserve(k_);
    for (int v : e) image.push_back(to_new[v]);
    kept.push_back(std::move(image));
  }
  int remaining = static_cast<int>(to_parent.size());
  return {Hypergraph(remaining, k_, std::move(kept)), std::move(to_parent)};
}

}  // namespace hvc
