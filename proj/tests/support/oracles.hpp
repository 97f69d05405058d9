#ifndef ARITHMORSE_TESTS_ORACLES_HPP
#define ARITHMORSE_TESTS_ORACLES_HPP

// Naive reference implementations used to cross-check the library. None of
// them share code with it beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include <gmpxx.h>

#include "arithmorse/graph.hpp"

namespace oracle {

using arithmorse::Graph;
using arithmorse::Label;

inline std::vector<std::int64_t> trial_factors(std::int64_t x) {
  std::vector<std::int64_t> f;
  for (std::int64_t p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    f.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) f.push_back(x);
  return f;
}

inline bool squarefree(std::int64_t x) {
  for (std::int64_t p = 2; p * p <= x; ++p)
    if (x % (p * p) == 0) return false;
  return true;
}

inline int mu(std::int64_t x) {
  if (x == 1) return 1;
  if (!squarefree(x)) return 0;
  return trial_factors(x).size() % 2 ? -1 : 1;
}

inline bool is_prime(std::int64_t x) { return x >= 2 && trial_factors(x) == std::vector<std::int64_t>{x}; }

/// Squarefree integers in [2, n] with exactly k prime factors (all odd if odd_only).
inline std::int64_t count_k(int k, std::int64_t n, bool odd_only) {
  std::int64_t c = 0;
  for (std::int64_t x = 2; x <= n; ++x) {
    if (!squarefree(x)) continue;
    if (odd_only && x % 2 == 0) continue;
    if (static_cast<int>(trial_factors(x).size()) == k) ++c;
  }
  return c;
}

/// Divisibility graph on the given labels, by pairwise test.
inline Graph divisibility_graph(std::vector<Label> labels) {
  std::vector<arithmorse::Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const auto a = std::min(labels[i], labels[j]), b = std::max(labels[i], labels[j]);
      if (b % a == 0) edges.emplace_back(a, b);
    }
  return Graph::from_edges(std::move(labels), edges);
}

/// All cliques as sorted label lists, by subset enumeration (order <= 22).
inline std::vector<std::vector<Label>> cliques(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : g.neighbors(i)) adj[i] |= 1u << j;
  std::vector<std::vector<Label>> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (s >> i & 1) ok = ((adj[i] | (1u << i)) & s) == s;
    if (!ok) continue;
    std::vector<Label> c;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) c.push_back(g.label(i));
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::size_t> f_vector(const Graph& g) {
  std::vector<std::size_t> f;
  for (const auto& c : cliques(g)) {
    if (f.size() < c.size()) f.resize(c.size(), 0);
    ++f[c.size() - 1];
  }
  return f;
}

/// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Betti numbers of a list of simplices closed under faces, by dense ranks over Q.
inline std::vector<std::int64_t> betti(const std::vector<std::vector<Label>>& simplices) {
  std::map<std::vector<Label>, std::size_t> index;
  std::vector<std::vector<std::vector<Label>>> by_dim;
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    const auto d = s.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    index[s] = by_dim[d].size();
    by_dim[d].push_back(s);
  }
  const std::size_t top = by_dim.size();
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[k] = rank of d_k
  for (std::size_t k = 1; k < top; ++k) {
    std::vector<std::vector<mpq_class>> m(by_dim[k - 1].size(), std::vector<mpq_class>(by_dim[k].size(), 0));
    for (std::size_t j = 0; j < by_dim[k].size(); ++j)
      for (std::size_t i = 0; i <= k; ++i) {
        auto face = by_dim[k][j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m[index.at(face)][j] = i % 2 ? -1 : 1;
      }
    ranks[k] = rank_q(std::move(m));
  }
  std::vector<std::int64_t> b(top, 0);
  for (std::size_t k = 0; k < top; ++k)
    b[k] = static_cast<std::int64_t>(by_dim[k].size() - ranks[k] - ranks[k + 1]);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

inline std::vector<std::int64_t> betti(const Graph& g) { return betti(cliques(g)); }

inline std::int64_t euler(const Graph& g) {
  std::int64_t chi = 0;
  for (const auto& c : cliques(g)) chi += c.size() % 2 ? 1 : -1;
  return chi;
}

/// Wu characteristic by testing every ordered pair of cliques.
inline std::int64_t wu(const Graph& g) {
  const auto cs = cliques(g);
  std::int64_t w = 0;
  for (const auto& x : cs)
    for (const auto& y : cs) {
      bool meet = false;
      for (auto a : x) meet = meet || std::find(y.begin(), y.end(), a) != y.end();
      if (meet) w += (x.size() + y.size()) % 2 ? -1 : 1;
    }
  return w;
}

inline Graph without(const Graph& g, Label x) {
  std::vector<Label> keep;
  for (auto l : g.labels())
    if (l != x) keep.push_back(l);
  return arithmorse::induced_subgraph(g, keep);
}

inline Graph sphere(const Graph& g, Label x) {
  std::vector<Label> nb;
  for (auto j : g.neighbors(g.require_index(x))) nb.push_back(g.label(j));
  return arithmorse::induced_subgraph(g, nb);
}

/// Literal recursive definitions, without memo or shortcuts.
inline bool contractible(const Graph& g) {
  if (g.order() == 1) return true;
  if (g.order() == 0) return false;
  for (auto x : g.labels())
    if (contractible(sphere(g, x)) && contractible(without(g, x))) return true;
  return false;
}

/// Sphere dimension, or nullopt when g is not an Evako sphere.
inline std::optional<int> sphere_dim(const Graph& g) {
  if (g.order() == 0) return -1;
  std::optional<int> d;
  for (auto x : g.labels()) {
    const auto s = sphere_dim(sphere(g, x));
    if (!s || (d && *d != *s + 1)) return std::nullopt;
    d = *s + 1;
  }
  for (auto x : g.labels())
    if (contractible(without(g, x))) return d;
  return std::nullopt;
}

inline mpq_class dimension(const Graph& g) {
  if (g.order() == 0) return -1;
  mpq_class sum = 0;
  for (auto x : g.labels()) sum += dimension(sphere(g, x));
  mpq_class r = 1 + sum / static_cast<long>(g.order());
  r.canonicalize();
  return r;
}

/// All-pairs BFS diameter of the component containing anchor.
inline int diameter(const Graph& g, Label anchor) {
  const auto n = g.order();
  std::vector<int> comp(n, -1);
  std::queue<std::size_t> q;
  const auto a = g.require_index(anchor);
  comp[a] = 0;
  q.push(a);
  std::vector<std::size_t> members;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    members.push_back(v);
    for (auto u : g.neighbors(v))
      if (comp[u] < 0) comp[u] = 0, q.push(u);
  }
  int best = 0;
  for (auto s : members) {
    std::vector<int> d(n, -1);
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      best = std::max(best, d[v]);
      for (auto u : g.neighbors(v))
        if (d[u] < 0) d[u] = d[v] + 1, q.push(u);
    }
  }
  return best;
}

}  // namespace oracle

#endif  // ARITHMORSE_TESTS_ORACLES_HPP
