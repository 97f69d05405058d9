#include "arithmorse/graph.hpp"

#include "arithmorse/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace arithmorse {

Graph Graph::from_edges(std::vector<Label> labels, std::span<const Edge> edges) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("graph labels must be distinct");
  if (!labels.empty() && labels.front() <= 0)
    throw std::invalid_argument("graph labels must be positive");

  Graph g;
  g.labels_ = std::move(labels);
  const std::size_t n = g.labels_.size();
  std::vector<std::vector<std::uint32_t>> lists(n);
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop at " + std::to_string(a));
    const auto i = g.require_index(a);
    const auto j = g.require_index(b);
    lists[i].push_back(static_cast<std::uint32_t>(j));
    lists[j].push_back(static_cast<std::uint32_t>(i));
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& l = lists[i];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    g.offsets_[i + 1] = g.offsets_[i] + l.size();
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (auto& l : lists) g.adjacency_.insert(g.adjacency_.end(), l.begin(), l.end());
  return g;
}

std::optional<std::size_t> Graph::index_of(Label x) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
  if (it == labels_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::require_index(Label x) const {
  auto i = index_of(x);
  if (!i) throw std::invalid_argument("unknown vertex label " + std::to_string(x));
  return *i;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(j));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < order(); ++i)
    for (auto j : neighbors(i))
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::Integer: return "integer";
    case GraphFamily::Prime: return "prime";
    case GraphFamily::Divisor: return "divisor";
  }
  return "unknown";
}

GraphFamily parse_family(const std::string& name) {
  if (name == "integer") return GraphFamily::Integer;
  if (name == "prime") return GraphFamily::Prime;
  if (name == "divisor") return GraphFamily::Divisor;
  throw std::invalid_argument("unknown graph kind '" + name + "'");
}

Graph build_graph(GraphKind kind, const FactorSieve& sieve) {
  const std::int64_t n = kind.param;
  if (n < 2) throw std::invalid_argument("graph parameter must be >= 2");
  if (n > sieve.limit()) throw std::invalid_argument("graph parameter exceeds sieve limit");

  std::vector<Label> labels;
  std::vector<Edge> edges;
  if (kind.family == GraphFamily::Divisor) {
    const auto primes = sieve.distinct_prime_factors(n);
    if (primes.size() > 20) throw std::invalid_argument("too many prime factors");
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t s = 1; s < subsets; ++s) {
      Label d = 1;
      for (std::size_t b = 0; b < primes.size(); ++b)
        if (s >> b & 1) d *= primes[b];
      if (d != n) labels.push_back(d);
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[j] % labels[i] == 0) edges.emplace_back(labels[i], labels[j]);
    return Graph::from_edges(std::move(labels), edges);
  }

  const bool squarefree_only = kind.family == GraphFamily::Prime;
  for (Label a = 2; a <= n; ++a)
    if (!squarefree_only || sieve.is_squarefree(a)) labels.push_back(a);
  for (Label a : labels)
    for (Label m = 2 * a; m <= n; m += a)
      if (!squarefree_only || sieve.is_squarefree(m)) edges.emplace_back(a, m);
  return Graph::from_edges(std::move(labels), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Label> labels(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<Label>(i + 1);
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<Label>(i + 1), static_cast<Label>(j + 1));
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
  std::vector<Label> labels(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<Label>(i + 1);
    edges.emplace_back(static_cast<Label>(i + 1), static_cast<Label>((i + 1) % n + 1));
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Label> labels(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<Label>(i + 1);
    if (i + 1 < n) edges.emplace_back(static_cast<Label>(i + 1), static_cast<Label>(i + 2));
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph induced_subgraph_by_index(const Graph& g, std::span<const std::size_t> indices) {
  Graph out;
  const std::size_t n = indices.size();
  std::vector<std::int64_t> remap(g.order(), -1);
  out.labels_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (indices[k] >= g.order() || (k > 0 && indices[k] <= indices[k - 1]))
      throw std::invalid_argument("induced_subgraph_by_index: indices must ascend");
    remap[indices[k]] = static_cast<std::int64_t>(k);
    out.labels_.push_back(g.label(indices[k]));
  }
  out.offsets_.assign(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto j : g.neighbors(indices[k]))
      if (remap[j] >= 0) out.adjacency_.push_back(static_cast<std::uint32_t>(remap[j]));
    out.offsets_[k + 1] = out.adjacency_.size();
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Label> labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (auto x : labels) idx.push_back(g.require_index(x));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return induced_subgraph_by_index(g, idx);
}

Graph unit_sphere(const Graph& g, Label x) {
  const auto i = g.require_index(x);
  std::vector<std::size_t> idx(g.neighbors(i).begin(), g.neighbors(i).end());
  return induced_subgraph_by_index(g, idx);
}

namespace {

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<Label>> components(const Graph& g) {
  std::vector<std::vector<Label>> out;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto w : g.neighbors(queue[head]))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    std::vector<Label> comp;
    comp.reserve(queue.size());
    for (auto v : queue) comp.push_back(g.label(v));
    out.push_back(std::move(comp));
  }
  return out;
}

int eccentricity(const Graph& g, Label source) {
  const auto dist = bfs(g, g.require_index(source));
  return *std::max_element(dist.begin(), dist.end());
}

int component_diameter(const Graph& g, Label anchor) {
  const auto root = bfs(g, g.require_index(anchor));
  int diameter = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (root[v] < 0) continue;
    const auto dist = bfs(g, v);
    diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
  }
  return diameter;
}

namespace {

void extend_clique(const Graph& g, int max_dim, std::vector<std::uint32_t>& clique,
                   const std::vector<std::uint32_t>& candidates,
                   const std::function<void(std::span<const std::uint32_t>)>& visit) {
  visit(clique);
  if (max_dim >= 0 && static_cast<int>(clique.size()) > max_dim) return;
  std::vector<std::uint32_t> next;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto c = candidates[k];
    auto nb = g.neighbors(c);
    next.clear();
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                          candidates.end(), nb.begin(), nb.end(), std::back_inserter(next));
    clique.push_back(c);
    extend_clique(g, max_dim, clique, next, visit);
    clique.pop_back();
  }
}

}  // namespace

void for_each_clique(const Graph& g, int max_dim,
                     const std::function<void(std::span<const std::uint32_t>)>& visit) {
  std::vector<std::uint32_t> clique;
  std::vector<std::uint32_t> candidates;
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    candidates.assign(std::upper_bound(nb.begin(), nb.end(), static_cast<std::uint32_t>(v)),
                      nb.end());
    clique.assign(1, static_cast<std::uint32_t>(v));
    extend_clique(g, max_dim, clique, candidates, visit);
  }
}

std::int64_t euler_characteristic(const Graph& g) {
  std::int64_t chi = 0;
  for_each_clique(g, -1, [&](std::span<const std::uint32_t> c) {
    chi += (c.size() % 2 == 1) ? 1 : -1;
  });
  return chi;
}

namespace {

std::vector<std::vector<Label>> sorted_simplices(const Graph& g) {
  std::vector<std::vector<Label>> simplices;
  for_each_clique(g, -1, [&](std::span<const std::uint32_t> c) {
    std::vector<Label> s;
    s.reserve(c.size());
    for (auto v : c) s.push_back(g.label(v));
    simplices.push_back(std::move(s));
  });
  std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return simplices;
}

// Nonempty proper or improper subsets of s, as sorted vectors.
template <typename F>
void for_each_face(const std::vector<Label>& s, bool include_self, F&& f) {
  const std::size_t full = (std::size_t{1} << s.size()) - 1;
  std::vector<Label> face;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (mask == full && !include_self) continue;
    face.clear();
    for (std::size_t b = 0; b < s.size(); ++b)
      if (mask >> b & 1) face.push_back(s[b]);
    f(face);
  }
}

}  // namespace

Refinement barycentric_refinement_cells(const Graph& g) {
  Refinement out;
  out.cells = sorted_simplices(g);
  std::map<std::vector<Label>, Label> position;
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    position.emplace(out.cells[i], static_cast<Label>(i + 1));
  std::vector<Label> labels(out.cells.size());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    labels[i] = static_cast<Label>(i + 1);
    for_each_face(out.cells[i], false, [&](const std::vector<Label>& face) {
      edges.emplace_back(position.at(face), static_cast<Label>(i + 1));
    });
  }
  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

Graph barycentric_refinement(const Graph& g) { return barycentric_refinement_cells(g).graph; }

ProductCells graph_product_cells(const Graph& g, const Graph& h) {
  const auto sg = sorted_simplices(g);
  const auto sh = sorted_simplices(h);
  std::map<std::vector<Label>, std::size_t> pos_g, pos_h;
  for (std::size_t i = 0; i < sg.size(); ++i) pos_g.emplace(sg[i], i);
  for (std::size_t j = 0; j < sh.size(); ++j) pos_h.emplace(sh[j], j);

  struct Cell {
    std::size_t dim, i, j;
  };
  std::vector<Cell> order;
  order.reserve(sg.size() * sh.size());
  for (std::size_t i = 0; i < sg.size(); ++i)
    for (std::size_t j = 0; j < sh.size(); ++j)
      order.push_back({sg[i].size() + sh[j].size() - 2, i, j});
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<Label> label_of(sg.size() * sh.size());
  ProductCells out;
  out.cells.reserve(order.size());
  std::vector<Label> labels(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    label_of[order[k].i * sh.size() + order[k].j] = static_cast<Label>(k + 1);
    labels[k] = static_cast<Label>(k + 1);
    out.cells.emplace_back(sg[order[k].i], sh[order[k].j]);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& [a, b] = out.cells[k];
    for_each_face(a, true, [&](const std::vector<Label>& fa) {
      const auto i = pos_g.at(fa);
      for_each_face(b, true, [&](const std::vector<Label>& fb) {
        const Label other = label_of[i * sh.size() + pos_h.at(fb)];
        if (other != static_cast<Label>(k + 1)) edges.emplace_back(other, static_cast<Label>(k + 1));
      });
    });
  }
  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

Graph graph_product(const Graph& g, const Graph& h) { return graph_product_cells(g, h).graph; }

VertexPermutation::VertexPermutation(std::vector<std::pair<Label, Label>> mapping)
    : mapping_(std::move(mapping)) {
  std::sort(mapping_.begin(), mapping_.end());
  std::vector<Label> sources, images;
  for (const auto& [s, t] : mapping_) {
    sources.push_back(s);
    images.push_back(t);
  }
  if (std::adjacent_find(sources.begin(), sources.end()) != sources.end())
    throw std::invalid_argument("permutation maps a label twice");
  std::sort(images.begin(), images.end());
  if (images != sources) throw std::invalid_argument("mapping is not a permutation of its domain");
}

VertexPermutation VertexPermutation::identity(std::span<const Label> labels) {
  std::vector<std::pair<Label, Label>> m;
  for (auto x : labels) m.emplace_back(x, x);
  return VertexPermutation(std::move(m));
}

Label VertexPermutation::operator()(Label x) const {
  auto it = std::lower_bound(mapping_.begin(), mapping_.end(), std::pair<Label, Label>{x, 0},
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == mapping_.end() || it->first != x)
    throw std::invalid_argument("label " + std::to_string(x) + " outside permutation domain");
  return it->second;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& inner) const {
  std::vector<std::pair<Label, Label>> m;
  for (const auto& [s, t] : inner.mapping_) m.emplace_back(s, (*this)(t));
  return VertexPermutation(std::move(m));
}

bool VertexPermutation::is_identity() const { return fixed_points() == mapping_.size(); }

std::size_t VertexPermutation::fixed_points() const {
  return static_cast<std::size_t>(
      std::count_if(mapping_.begin(), mapping_.end(), [](const auto& p) { return p.first == p.second; }));
}

std::vector<std::vector<Label>> VertexPermutation::cycles() const {
  std::vector<std::vector<Label>> out;
  std::map<Label, bool> seen;
  for (const auto& [s, t] : mapping_) {
    if (s == t || seen[s]) continue;
    std::vector<Label> cycle;
    for (Label x = s; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool is_automorphism(const Graph& g, const VertexPermutation& t) {
  if (t.size() != g.order()) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (t.mapping()[i].first != g.label(i)) return false;
  for (const auto& [a, b] : g.edges()) {
    const auto i = g.require_index(t(a));
    const auto j = g.require_index(t(b));
    if (!g.adjacent(i, j)) return false;
  }
  return true;  // injective on a finite edge set, so edges map onto edges
}

VertexPermutation kummer_involution(std::int64_t m, const FactorSieve& sieve) {
  if (m < 2 || m > sieve.limit()) throw std::invalid_argument("kummer_involution: m out of range");
  const auto sig = prime_signature(m, sieve);
  if (!sig.squarefree) throw std::invalid_argument("kummer_involution: m must be squarefree");
  if (sig.nu() < 2) throw std::invalid_argument("kummer_involution: m needs two prime factors");
  const auto g = build_graph({GraphFamily::Divisor, m}, sieve);
  std::vector<std::pair<Label, Label>> map;
  for (auto k : g.labels()) map.emplace_back(k, m / k);
  VertexPermutation t(std::move(map));
  if (!is_automorphism(g, t))
    throw ConsistencyError("k -> m/k is not an automorphism of Divisor(" + std::to_string(m) + ")");
  return t;
}

std::vector<Label> heteroclinic(const Graph& g, Label x, Label y) {
  g.require_index(x);
  g.require_index(y);
  std::vector<Label> out;
  for (auto z : g.labels())
    if (z % x == 0 && y % z == 0) out.push_back(z);
  return out;
}

std::string graph_to_json(const Graph& g, GraphKind kind) {
  nlohmann::ordered_json j;
  j["kind"] = family_name(kind.family);
  j["param"] = kind.param;
  j["vertices"] = std::vector<Label>(g.labels().begin(), g.labels().end());
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump();
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (auto x : g.labels()) os << "  " << x << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace arithmorse
