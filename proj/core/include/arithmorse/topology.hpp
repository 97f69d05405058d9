#ifndef ARITHMORSE_TOPOLOGY_HPP
#define ARITHMORSE_TOPOLOGY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "arithmorse/graph.hpp"

namespace arithmorse {

using Rational = mpq_class;

/// Subset of the vertices of a fixed ambient graph, as a bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe, bool full = false);

  std::size_t universe() const { return universe_; }
  bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  bool none() const;
  /// Smallest member at or after i, or universe() if none.
  std::size_t next(std::size_t i) const;
  std::size_t first() const { return next(0); }
  std::vector<std::size_t> members() const;

  VertexSet& operator&=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  /// True when every member of this is in o.
  bool subset_of(const VertexSet& o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

enum class SphereStatus { Sphere, Contractible, Neither, Unknown };
enum class VerdictMethod { ExactRecursion, FastScreen };

std::string to_string(SphereStatus status);
std::string to_string(VerdictMethod method);

struct SphereVerdict {
  SphereStatus status = SphereStatus::Unknown;
  /// Sphere dimension, meaningful only when status == Sphere.
  int dimension = -2;
  VerdictMethod method = VerdictMethod::ExactRecursion;

  bool is_sphere() const { return status == SphereStatus::Sphere; }
  bool is_sphere_of(int d) const { return is_sphere() && dimension == d; }
  friend bool operator==(const SphereVerdict&, const SphereVerdict&) = default;
};

struct RecognizerConfig {
  /// Largest vertex count decided by the literal recursion.
  std::size_t recursion_cap = 25;
};

/**
 * Evako sphere and contractibility recognition on induced subgraphs of one
 * ambient graph, memoized by vertex set.
 *
 * Contractibility follows the recursive definition. Two theorems of that
 * definition shortcut it without changing the answer: a cone (some vertex
 * adjacent to all others) is contractible, and a contractible graph is
 * connected with Euler characteristic 1. Above the recursion cap a greedy
 * collapse (delete any vertex with contractible unit sphere until one vertex
 * is left) can still certify contractibility; sets it does not decide raise
 * ResourceLimitError.
 *
 * Sphere recognition recurses on unit spheres and then searches for a
 * vertex whose deletion is contractible. Above the cap it switches to the
 * fast screen: every unit sphere must be a (k-1)-sphere and the Betti vector
 * must be that of a k-sphere.
 *
 * Not thread-safe; use one instance per worker.
 */
class Recognizer {
 public:
  explicit Recognizer(const Graph& ambient, RecognizerConfig config = {});

  const Graph& ambient() const { return ambient_; }
  VertexSet all() const { return VertexSet(ambient_.order(), true); }
  /// Neighbors of vertex v inside w.
  VertexSet sphere_in(std::size_t v, const VertexSet& w) const;

  bool contractible(const VertexSet& w);
  SphereVerdict sphere(const VertexSet& w);
  std::int64_t euler_characteristic(const VertexSet& w) const;
  bool connected(const VertexSet& w) const;
  bool is_cone(const VertexSet& w) const;
  Graph subgraph(const VertexSet& w) const;

 private:
  SphereVerdict fast_screen(const VertexSet& w);
  bool collapses(VertexSet w);
  std::int64_t alternating_cliques(const VertexSet& candidates, std::int64_t sign) const;

  Graph ambient_;
  RecognizerConfig config_;
  std::vector<VertexSet> adjacency_;
  std::vector<VertexSet> above_;  // above_[v] = indices greater than v
  std::unordered_map<VertexSet, bool, VertexSetHash> contractible_memo_;
  std::unordered_map<VertexSet, SphereVerdict, VertexSetHash> sphere_memo_;
  std::unordered_set<VertexSet, VertexSetHash> undecided_;
};

bool is_contractible(const Graph& g, RecognizerConfig config = {});
SphereVerdict sphere_dimension(const Graph& g, RecognizerConfig config = {});

/**
 * dim(empty) = -1, dim(G) = 1 + sum over vertices of dim(S(x)) / |V|, exact.
 * Memoized by vertex set within one ambient graph.
 */
class DimensionEvaluator {
 public:
  explicit DimensionEvaluator(const Graph& ambient);
  const Graph& ambient() const { return ambient_; }
  Rational dimension(const VertexSet& w);
  VertexSet sphere_in(std::size_t v, const VertexSet& w) const;
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Graph ambient_;
  std::vector<VertexSet> adjacency_;
  std::unordered_map<VertexSet, Rational, VertexSetHash> memo_;
};

Rational inductive_dimension(const Graph& g);

/**
 * Inductive dimension of every prefix {first k vertices} of an ambient
 * graph, vertices added in ascending label order. Only the unit spheres of
 * the new vertex and of its earlier neighbors change at each step, so the
 * running sum is updated rather than recomputed.
 */
class FiltrationDimension {
 public:
  explicit FiltrationDimension(const Graph& ambient);
  /// Adds the next vertex and returns the dimension of the enlarged graph.
  Rational add_next();
  std::size_t added() const { return added_; }
  bool done() const { return added_ == evaluator_.ambient().order(); }

 private:
  DimensionEvaluator evaluator_;
  VertexSet present_;
  std::vector<Rational> sphere_dim_;
  Rational sum_{0};
  std::size_t added_ = 0;
};

/// Repeatedly deletes the smallest-label vertex whose unit sphere is
/// contractible, rescanning from the start after each deletion. Vertices whose
/// unit sphere cannot be decided within the recursion cap are kept.
Graph homotopy_reduce(const Graph& g, RecognizerConfig config = {});

/// Exact rational printed as "p/q", or "p" for integers.
std::string rational_string(const Rational& q);

}  // namespace arithmorse

#endif  // ARITHMORSE_TOPOLOGY_HPP
