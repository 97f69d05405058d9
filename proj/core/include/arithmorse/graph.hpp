#ifndef ARITHMORSE_GRAPH_HPP
#define ARITHMORSE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithmorse/arithmetic.hpp"

namespace arithmorse {

using Label = std::int64_t;
using Edge = std::pair<Label, Label>;

/**
 * Immutable finite simple graph.
 *
 * Vertices carry distinct positive labels kept in ascending order; the vertex
 * index is the position of the label in that order. Adjacency is stored in
 * CSR form with ascending neighbor indices, so every traversal visits
 * neighbors in ascending label order.
 */
class Graph {
 public:
  Graph() = default;

  /// Validates labels (positive, distinct) and edges (known endpoints, no
  /// loops). Duplicate edges are merged.
  static Graph from_edges(std::vector<Label> labels, std::span<const Edge> edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return adjacency_.size() / 2; }
  bool empty() const { return labels_.empty(); }

  std::span<const Label> labels() const { return labels_; }
  Label label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> index_of(Label x) const;
  /// Like index_of but throws std::invalid_argument for unknown labels.
  std::size_t require_index(Label x) const;
  bool contains(Label x) const { return index_of(x).has_value(); }

  std::span<const std::uint32_t> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const;

  /// Edges as label pairs (a, b) with a < b in ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> adjacency_;

  friend Graph induced_subgraph_by_index(const Graph&, std::span<const std::size_t>);
};

enum class GraphFamily { Integer, Prime, Divisor };

struct GraphKind {
  GraphFamily family = GraphFamily::Prime;
  std::int64_t param = 2;
};

std::string family_name(GraphFamily family);
/// Accepts "integer", "prime", "divisor".
GraphFamily parse_family(const std::string& name);

/**
 * Divisibility graphs. Integer(n): labels 2..n. Prime(n): squarefree labels
 * in [2, n]. Divisor(m): squarefree divisors of m other than 1 and m. Two
 * labels are adjacent when one divides the other.
 */
Graph build_graph(GraphKind kind, const FactorSieve& sieve);

/// {"kind":"prime","param":n,"vertices":[...],"edges":[[a,b],...]}, keys in that order.
std::string graph_to_json(const Graph& g, GraphKind kind);
/// Undirected DOT; nodes are the integer labels.
std::string graph_to_dot(const Graph& g, const std::string& name);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Induced subgraph on the given labels (order and repeats do not matter).
Graph induced_subgraph(const Graph& g, std::span<const Label> labels);
/// Induced subgraph on vertex indices, which must be ascending and unique.
Graph induced_subgraph_by_index(const Graph& g, std::span<const std::size_t> indices);

/// Graph generated by the neighbors of x.
Graph unit_sphere(const Graph& g, Label x);

/// Connected components, each listed in ascending label order, ordered by
/// their smallest label.
std::vector<std::vector<Label>> components(const Graph& g);

/// Largest BFS distance between two vertices of the component containing anchor.
int component_diameter(const Graph& g, Label anchor);

/// Largest BFS distance from the source to a vertex of its component.
int eccentricity(const Graph& g, Label source);

/**
 * Calls visit(clique) for every nonempty complete subgraph, clique given as
 * ascending vertex indices. Cliques are produced depth first from the
 * smallest vertex, extending by larger neighbors. max_dim limits the clique
 * dimension (size - 1); a negative value means unbounded.
 */
void for_each_clique(const Graph& g, int max_dim,
                     const std::function<void(std::span<const std::uint32_t>)>& visit);

/// Alternating clique count sum_k (-1)^k v_k.
std::int64_t euler_characteristic(const Graph& g);

/// Graph together with the simplex of the source graph behind each vertex.
struct Refinement {
  Graph graph;
  /// cells[i] is the simplex (ascending source labels) of vertex label i + 1.
  std::vector<std::vector<Label>> cells;
};

/**
 * Barycentric refinement: one vertex per simplex, edges by proper
 * containment. Simplices are ordered by dimension, then lexicographically by
 * label, and the i-th simplex gets label i + 1.
 */
Refinement barycentric_refinement_cells(const Graph& g);
Graph barycentric_refinement(const Graph& g);

/// Product graph together with the simplex pair behind each vertex.
struct ProductCells {
  Graph graph;
  /// cells[i] = (simplex of G, simplex of H) for vertex label i + 1.
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> cells;
};

/**
 * Product: vertices are pairs (x, y) of simplices of G and H, adjacent when
 * one pair is contained in the other coordinatewise. Pairs are ordered by
 * total dimension, then by the position of x and y in the barycentric order,
 * and labelled from 1.
 */
ProductCells graph_product_cells(const Graph& g, const Graph& h);
Graph graph_product(const Graph& g, const Graph& h);

/// Permutation of a finite label set, stored as (source, image) pairs sorted by source.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  /// Throws std::invalid_argument unless the pairs define a bijection of one set.
  explicit VertexPermutation(std::vector<std::pair<Label, Label>> mapping);

  static VertexPermutation identity(std::span<const Label> labels);

  Label operator()(Label x) const;
  std::span<const std::pair<Label, Label>> mapping() const { return mapping_; }
  std::size_t size() const { return mapping_.size(); }

  VertexPermutation compose(const VertexPermutation& inner) const;  // this after inner
  bool is_identity() const;
  std::size_t fixed_points() const;
  /// Nontrivial cycles, each starting at its smallest label, sorted.
  std::vector<std::vector<Label>> cycles() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<std::pair<Label, Label>> mapping_;
};

/// True when the permutation is defined on exactly the vertex set and maps edges onto edges.
bool is_automorphism(const Graph& g, const VertexPermutation& t);

/// k -> m / k on Divisor(m), verified to be an automorphism.
VertexPermutation kummer_involution(std::int64_t m, const FactorSieve& sieve);

/// {z in G : x | z and z | y}, ascending.
std::vector<Label> heteroclinic(const Graph& g, Label x, Label y);

}  // namespace arithmorse

#endif  // ARITHMORSE_GRAPH_HPP
