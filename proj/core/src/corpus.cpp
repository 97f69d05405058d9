#include "arithmorse/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arithmorse {

namespace {

constexpr int kMaxOrder = 7;

// Bit of the edge {i, j}, i < j, in the upper-triangle mask.
int edge_bit(int i, int j) { return j * (j - 1) / 2 + i; }

bool has_edge(std::uint32_t mask, int i, int j) {
  if (i > j) std::swap(i, j);
  return mask >> edge_bit(i, j) & 1;
}

// Minimum relabelled mask over relabellings that list vertices by
// descending degree. That set of relabellings is itself invariant, so the
// minimum is a canonical form.
std::uint32_t canonical(std::uint32_t mask, int n) {
  std::vector<int> degree(n, 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (has_edge(mask, i, j)) ++degree[i], ++degree[j];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal degree
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && degree[order[e]] == degree[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::uint32_t best = ~std::uint32_t{0};
  // Enumerate the product of permutations within each block.
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      std::uint32_t m = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          if (has_edge(mask, order[i], order[j])) m |= std::uint32_t{1} << edge_bit(i, j);
      best = std::min(best, m);
      return;
    }
    auto [s, e] = blocks[b];
    std::sort(order.begin() + s, order.begin() + e);
    do {
      self(self, b + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + e));
  };
  recurse(recurse, 0);
  return best;
}

Graph from_mask(std::uint32_t mask, int n) {
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), Label{1});
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (has_edge(mask, i, j)) edges.emplace_back(i + 1, j + 1);
  return Graph::from_edges(std::move(labels), edges);
}

}  // namespace

std::uint32_t canonical_mask(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n > kMaxOrder) throw std::invalid_argument("canonical masks are limited to 7 vertices");
  std::uint32_t mask = 0;
  for (int j = 0; j < n; ++j)
    for (auto i : g.neighbors(static_cast<std::size_t>(j)))
      if (static_cast<int>(i) < j) mask |= std::uint32_t{1} << edge_bit(static_cast<int>(i), j);
  return canonical(mask, n);
}

std::vector<Graph> connected_graphs(int max_order) {
  if (max_order < 1 || max_order > kMaxOrder) throw std::invalid_argument("max_order must be in 1..7");
  // Every connected graph has a vertex whose removal keeps it connected, so
  // each level follows from the previous one by attaching a vertex.
  std::vector<Graph> out{from_mask(0, 1)};
  std::set<std::uint32_t> level{0};
  for (int n = 2; n <= max_order; ++n) {
    std::set<std::uint32_t> next;
    for (auto mask : level) {
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        std::uint32_t m = mask;
        for (int i = 0; i < n - 1; ++i)
          if (nb >> i & 1) m |= std::uint32_t{1} << edge_bit(i, n - 1);
        next.insert(canonical(m, n));
      }
    }
    for (auto mask : next) out.push_back(from_mask(mask, n));
    level = std::move(next);
  }
  return out;
}

}  // namespace arithmorse
