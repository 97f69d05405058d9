#include "arithmorse/topology.hpp"

#include <algorithm>
#include <bit>

#include "arithmorse/cohomology.hpp"
#include "arithmorse/complex.hpp"
#include "arithmorse/errors.hpp"

namespace arithmorse {

VertexSet::VertexSet(std::size_t universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  if (full && universe % 64 != 0) words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::next(std::size_t i) const {
  if (i >= universe_) return universe_;
  std::size_t wi = i >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return std::min(universe_, (wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi == words_.size()) return universe_;
    w = words_[wi];
  }
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (auto i = first(); i < universe_; i = next(i + 1)) out.push_back(i);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~o.words_[k]) return false;
  return true;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string to_string(SphereStatus status) {
  switch (status) {
    case SphereStatus::Sphere: return "sphere";
    case SphereStatus::Contractible: return "contractible";
    case SphereStatus::Neither: return "neither";
    case SphereStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(VerdictMethod method) {
  return method == VerdictMethod::ExactRecursion ? "exact" : "fast-screen";
}

namespace {

std::vector<VertexSet> adjacency_sets(const Graph& g) {
  std::vector<VertexSet> adj(g.order(), VertexSet(g.order()));
  for (std::size_t v = 0; v < g.order(); ++v)
    for (auto u : g.neighbors(v)) adj[v].set(u);
  return adj;
}

SphereVerdict verdict(SphereStatus s, int dim, VerdictMethod m) { return SphereVerdict{s, dim, m}; }

bool sphere_betti(const BettiVector& b, int k) {
  if (k == 0) return b.b == std::vector<std::int64_t>{2};
  std::vector<std::int64_t> want(static_cast<std::size_t>(k) + 1, 0);
  want.front() = 1;
  want.back() = 1;
  return b.b == want;
}

}  // namespace

Recognizer::Recognizer(const Graph& ambient, RecognizerConfig config)
    : ambient_(ambient), config_(config), adjacency_(adjacency_sets(ambient)) {
  above_.reserve(ambient_.order());
  for (std::size_t v = 0; v < ambient_.order(); ++v) {
    VertexSet a(ambient_.order(), true);
    for (std::size_t u = 0; u <= v; ++u) a.reset(u);
    above_.push_back(std::move(a));
  }
}

VertexSet Recognizer::sphere_in(std::size_t v, const VertexSet& w) const { return adjacency_[v] & w; }

std::int64_t Recognizer::alternating_cliques(const VertexSet& candidates, std::int64_t sign) const {
  // Signed count of nonempty cliques inside candidates, each weighted (-1)^(size-1) * sign.
  std::int64_t total = 0;
  for (auto v = candidates.first(); v < candidates.universe(); v = candidates.next(v + 1)) {
    total += sign;
    VertexSet rest = candidates & adjacency_[v];
    rest &= above_[v];
    if (!rest.none()) total += alternating_cliques(rest, -sign);
  }
  return total;
}

std::int64_t Recognizer::euler_characteristic(const VertexSet& w) const { return alternating_cliques(w, 1); }

bool Recognizer::connected(const VertexSet& w) const {
  const auto start = w.first();
  if (start >= w.universe()) return true;
  VertexSet seen(w.universe());
  seen.set(start);
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    const VertexSet nb = adjacency_[v] & w;
    for (auto u = nb.first(); u < nb.universe(); u = nb.next(u + 1)) {
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
    }
  }
  return w.subset_of(seen);
}

bool Recognizer::is_cone(const VertexSet& w) const {
  const auto n = w.count();
  for (auto v = w.first(); v < w.universe(); v = w.next(v + 1))
    if ((adjacency_[v] & w).count() + 1 == n) return true;
  return false;
}

Graph Recognizer::subgraph(const VertexSet& w) const {
  const auto idx = w.members();
  return induced_subgraph_by_index(ambient_, idx);
}

namespace {

// Repeatedly removes a vertex v whose closed neighborhood lies in that of
// another vertex u. S(v) is then a cone over u, so reaching one vertex is
// a contractibility certificate.
bool dismantlable(const std::vector<VertexSet>& adj, VertexSet w) {
  bool progress = true;
  while (progress && w.count() > 1) {
    progress = false;
    for (auto v = w.first(); v < w.universe() && !progress; v = w.next(v + 1)) {
      VertexSet closed_v = adj[v] & w;
      closed_v.set(v);
      const VertexSet nb = adj[v] & w;
      for (auto u = nb.first(); u < nb.universe(); u = nb.next(u + 1)) {
        VertexSet closed_u = adj[u] & w;
        closed_u.set(u);
        if (closed_v.subset_of(closed_u)) {
          w.reset(v);
          progress = true;
          break;
        }
      }
    }
  }
  return w.count() == 1;
}

}  // namespace

// Greedy version of the recursive definition: deleting a vertex whose unit
// sphere is contractible and ending at one vertex certifies contractibility.
// Unit spheres that cannot be decided are not deleted.
bool Recognizer::collapses(VertexSet w) {
  bool progress = true;
  while (progress && w.count() > 1) {
    progress = false;
    for (auto v = w.first(); v < w.universe() && !progress; v = w.next(v + 1)) {
      bool removable = false;
      try {
        removable = contractible(sphere_in(v, w));
      } catch (const ResourceLimitError&) {
      }
      if (removable) {
        w.reset(v);
        progress = true;
      }
    }
  }
  return w.count() == 1;
}

bool Recognizer::contractible(const VertexSet& w) {
  const auto n = w.count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (auto it = contractible_memo_.find(w); it != contractible_memo_.end()) return it->second;

  bool result = false;
  if (is_cone(w) || dismantlable(adjacency_, w)) {
    result = true;
  } else if (!connected(w) || euler_characteristic(w) != 1) {
    result = false;
  } else {
    if (n > config_.recursion_cap) {
      if (!undecided_.count(w) && collapses(w)) {
        contractible_memo_.emplace(w, true);
        return true;
      }
      undecided_.insert(w);
      throw ResourceLimitError("contractibility of a " + std::to_string(n) +
                               "-vertex graph exceeds the recursion cap of " +
                               std::to_string(config_.recursion_cap));
    }
    for (auto v = w.first(); v < w.universe() && !result; v = w.next(v + 1)) {
      if (!contractible(sphere_in(v, w))) continue;
      VertexSet rest = w;
      rest.reset(v);
      result = contractible(rest);
    }
  }
  contractible_memo_.emplace(w, result);
  return result;
}

SphereVerdict Recognizer::sphere(const VertexSet& w) {
  const auto n = w.count();
  if (n == 0) return verdict(SphereStatus::Sphere, -1, VerdictMethod::ExactRecursion);
  if (auto it = sphere_memo_.find(w); it != sphere_memo_.end()) return it->second;
  if (n > config_.recursion_cap) {
    auto v = fast_screen(w);
    sphere_memo_.emplace(w, v);
    return v;
  }

  // Every set below is within the cap, so all verdicts here are exact.
  int k = -2;
  bool d_graph = true;
  for (auto v = w.first(); v < w.universe() && d_graph; v = w.next(v + 1)) {
    const auto s = sphere(sphere_in(v, w));
    if (!s.is_sphere() || (k != -2 && s.dimension + 1 != k)) d_graph = false;
    k = s.dimension + 1;
  }
  SphereVerdict result;
  if (d_graph) {
    for (auto v = w.first(); v < w.universe(); v = w.next(v + 1)) {
      VertexSet rest = w;
      rest.reset(v);
      if (contractible(rest)) {
        result = verdict(SphereStatus::Sphere, k, VerdictMethod::ExactRecursion);
        break;
      }
    }
  }
  if (!result.is_sphere())
    result = verdict(contractible(w) ? SphereStatus::Contractible : SphereStatus::Neither, -2,
                     VerdictMethod::ExactRecursion);
  sphere_memo_.emplace(w, result);
  return result;
}

SphereVerdict Recognizer::fast_screen(const VertexSet& w) {
  // not_sphere: certified not a sphere; undecided: some unit sphere is Unknown.
  int k = -2;
  bool not_sphere = false, undecided = false;
  for (auto v = w.first(); v < w.universe() && !not_sphere; v = w.next(v + 1)) {
    const auto s = sphere(sphere_in(v, w));
    if (s.status == SphereStatus::Unknown) {
      undecided = true;
    } else if (!s.is_sphere() || (k != -2 && s.dimension + 1 != k)) {
      not_sphere = true;
    } else {
      k = s.dimension + 1;
    }
  }
  if (!not_sphere && !undecided) {
    const auto complex = whitney_complex(subgraph(w));
    if (sphere_betti(betti_numbers(complex), k))
      return verdict(SphereStatus::Sphere, k, VerdictMethod::FastScreen);
    not_sphere = true;
  }
  try {
    if (contractible(w)) return verdict(SphereStatus::Contractible, -2, VerdictMethod::FastScreen);
    if (not_sphere) return verdict(SphereStatus::Neither, -2, VerdictMethod::FastScreen);
  } catch (const ResourceLimitError&) {
  }
  return verdict(SphereStatus::Unknown, -2, VerdictMethod::FastScreen);
}

bool is_contractible(const Graph& g, RecognizerConfig config) {
  Recognizer r(g, config);
  return r.contractible(r.all());
}

SphereVerdict sphere_dimension(const Graph& g, RecognizerConfig config) {
  Recognizer r(g, config);
  return r.sphere(r.all());
}

DimensionEvaluator::DimensionEvaluator(const Graph& ambient)
    : ambient_(ambient), adjacency_(adjacency_sets(ambient)) {}

VertexSet DimensionEvaluator::sphere_in(std::size_t v, const VertexSet& w) const { return adjacency_[v] & w; }

Rational DimensionEvaluator::dimension(const VertexSet& w) {
  const auto n = w.count();
  if (n == 0) return Rational(-1);
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  Rational sum(0);
  for (auto v = w.first(); v < w.universe(); v = w.next(v + 1)) sum += dimension(sphere_in(v, w));
  Rational result = 1 + sum / Rational(static_cast<unsigned long>(n));
  result.canonicalize();
  memo_.emplace(w, result);
  return result;
}

Rational inductive_dimension(const Graph& g) {
  DimensionEvaluator e(g);
  return e.dimension(VertexSet(g.order(), true));
}

FiltrationDimension::FiltrationDimension(const Graph& ambient)
    : evaluator_(ambient), present_(ambient.order()), sphere_dim_(ambient.order()) {}

Rational FiltrationDimension::add_next() {
  if (done()) throw std::out_of_range("filtration already complete");
  const auto x = added_++;
  present_.set(x);
  for (auto u : evaluator_.ambient().neighbors(x)) {
    if (u >= x) break;
    const auto d = evaluator_.dimension(evaluator_.sphere_in(u, present_));
    sum_ += d - sphere_dim_[u];
    sphere_dim_[u] = d;
  }
  sphere_dim_[x] = evaluator_.dimension(evaluator_.sphere_in(x, present_));
  sum_ += sphere_dim_[x];
  Rational result = 1 + sum_ / Rational(static_cast<unsigned long>(added_));
  result.canonicalize();
  return result;
}

Graph homotopy_reduce(const Graph& g, RecognizerConfig config) {
  Recognizer r(g, config);
  VertexSet w = r.all();
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto v = w.first(); v < w.universe(); v = w.next(v + 1)) {
      bool removable = false;
      try {
        removable = r.contractible(r.sphere_in(v, w));
      } catch (const ResourceLimitError&) {
      }
      if (removable) {
        w.reset(v);
        removed = true;
        break;
      }
    }
  }
  return r.subgraph(w);
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace arithmorse
