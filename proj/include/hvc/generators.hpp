#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "hvc/hypergraph.hpp"
#include "hvc/rational.hpp"

namespace hvc {

/// All k-subsets of n vertices.
Hypergraph complete(int n, int k);

/// Exactly ceil(epsilon * C(n,k)) distinct k-subsets drawn uniformly at
/// random, so the result is 0-wise epsilon-dense by construction.
Hypergraph random_dense(int n, int k, const Rational& epsilon, uint64_t seed);

struct CirculantResult {
  Hypergraph graph;
  long long degree = 0;  // common degree of every vertex
};

/// Exactly regular hypergraph on residues mod n: picks `blocks` base
/// k-subsets containing 0 (deduplicated under rotation, order fixed by the
/// seed) and takes every rotation of each. Throws GenerationError when
/// fewer distinct rotation classes exist than requested.
CirculantResult circulant_regular(int n, int k, int blocks, uint64_t seed);

/// Smallest block count whose circulant instance has average degree at
/// least n^(k-1) / ln n.
int subdense_block_count(int n, int k);

struct PlantedResult {
  Hypergraph graph;
  Cover planted_cover;  // {0, ..., q-1}; every edge intersects it
};

/// ceil(epsilon * C(n,k)) distinct k-subsets drawn uniformly among those
/// intersecting P = {0..q-1}. The complement of P is independent, so the
/// optimum is at most q. Throws InputError if more edges are requested
/// than P-hitting subsets exist.
PlantedResult planted(int n, int k, int q, const Rational& epsilon, uint64_t seed);

/// Joins a clique sized to make the result roughly ell-wise epsilon-dense:
/// adds ceil(c*N) fresh vertices with c = 1 - (1-epsilon)^(1/(k-ell)) and
/// N = ceil(n/(1-c)), plus every k-subset touching at least one of them.
/// Finite-size instances fall short of the nominal density; callers should
/// measure with density_report.
Hypergraph clique_gadget(const Hypergraph& h, int ell, const Rational& epsilon);

struct CopiesResult {
  Hypergraph graph;
  Rational degree_ratio;  // achieved avg_degree / max_degree
  long long cross_edges_added = 0;
};

/// Disjoint copies of h next to disjoint complete hypergraphs on n+k
/// vertices (counts ceil((1 - eps/k)*n*scale) and ceil((eps/k)*n*scale)),
/// then cross edges in a fixed lexicographic order until the
/// average-to-maximum degree ratio reaches epsilon or the edge budget
/// runs out. The achieved ratio is reported.
CopiesResult copies_gadget(const Hypergraph& h, const Rational& epsilon,
                           const Rational& scale = Rational(1));

enum class Model {
  kComplete,
  kRandomDense,
  kCirculantRegular,
  kPlanted,
  kCliqueGadget,
  kCopiesGadget,
};

const char* model_name(Model model);
Model model_from_name(const std::string& name);

/// Declarative description of one instance; drives the CLI and bench suites.
struct GenSpec {
  Model model = Model::kComplete;
  int n = 0;
  int k = 2;
  Rational epsilon = Rational(1, 2);
  int q = 1;                       // planted cover size
  int blocks = 1;                  // circulant base blocks
  bool subdense = false;           // circulant: pick blocks for subdensity
  int ell = 0;                     // clique gadget level
  Rational scale = Rational(1);    // copies gadget class scaling
  uint64_t seed = 0;
  std::shared_ptr<GenSpec> base;   // gadget input instance
  std::string base_path;           // alternative: gadget input from file

  std::string id() const;
};

struct GeneratedInstance {
  Hypergraph graph;
  std::string id;
  std::optional<Cover> planted_cover;
  std::optional<long long> regular_degree;
  std::optional<Rational> degree_ratio;
};

GeneratedInstance generate(const GenSpec& spec);

}  // namespace hvc
