#include "arithmorse/morse.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "arithmorse/complex.hpp"
#include "arithmorse/errors.hpp"

namespace arithmorse {

std::int64_t identity_function(Label x) { return x; }

namespace {

Graph oriented_sphere(const Graph& g, const VertexFunction& f, Label x, int direction) {
  const auto i = g.require_index(x);
  const auto fx = f(x);
  std::vector<std::size_t> keep;
  for (auto u : g.neighbors(i)) {
    const auto fy = f(g.label(u));
    if (fy == fx)
      throw std::invalid_argument("function is not locally injective at " + std::to_string(x));
    if ((direction < 0 && fy < fx) || (direction > 0 && fy > fx)) keep.push_back(u);
  }
  return induced_subgraph_by_index(g, keep);
}

// Runs body(i) for i in [0, count) on up to `threads` workers. If several
// items throw, the exception of the smallest index is rethrown, so failures
// do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = count;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

}  // namespace

Graph stable_sphere(const Graph& g, const VertexFunction& f, Label x) { return oriented_sphere(g, f, x, -1); }

Graph unstable_sphere(const Graph& g, const VertexFunction& f, Label x) { return oriented_sphere(g, f, x, 1); }

std::string to_string(EventKind kind) { return kind == EventKind::Critical ? "critical" : "homotopy"; }

FiltrationEvent classify_vertex(const Graph& g, const VertexFunction& f, Label x, const FactorSieve* sieve,
                                RecognizerConfig config) {
  const Graph s = stable_sphere(g, f, x);
  const auto verdict = sphere_dimension(s, config);
  const auto chi = euler_characteristic(s);

  FiltrationEvent e;
  e.n = x;
  e.mu = sieve ? moebius(x, *sieve) : 0;
  e.ph_index = static_cast<int>(1 - chi);
  e.method = verdict.method;
  switch (verdict.status) {
    case SphereStatus::Sphere:
      if (chi != 1 + (verdict.dimension % 2 == 0 ? 1 : -1))
        throw ConsistencyError("stable sphere of " + std::to_string(x) + " has the wrong Euler characteristic");
      e.kind = EventKind::Critical;
      e.stable_sphere_dim = verdict.dimension;
      e.morse_index = verdict.dimension + 1;
      break;
    case SphereStatus::Contractible:
      e.kind = EventKind::HomotopyStep;
      break;
    case SphereStatus::Neither:
      throw ClassificationError("stable sphere of " + std::to_string(x) + " is neither a sphere nor contractible", x);
    case SphereStatus::Unknown:
      throw ClassificationError("stable sphere of " + std::to_string(x) + " could not be classified", x);
  }
  return e;
}

MorseInequalities morse_inequality_check(std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
  const auto n = std::max(b.size(), c.size());
  b = padded(std::move(b), n);
  c = padded(std::move(c), n);
  MorseInequalities out;
  out.weak = true;
  out.strong = true;
  std::int64_t r = 0, alternating = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k] > c[k]) out.weak = false;
    r = (c[k] - b[k]) - r;
    out.r.push_back(r);
    if (r < 0) out.strong = false;
    alternating += (k % 2 == 0 ? 1 : -1) * (c[k] - b[k]);
  }
  if (alternating != 0) out.strong = false;
  return out;
}

std::vector<std::int64_t> critical_counts(const std::vector<FiltrationEvent>& events, Label limit) {
  std::vector<std::int64_t> c;
  for (const auto& e : events) {
    if (e.n > limit || e.kind != EventKind::Critical) continue;
    const auto m = static_cast<std::size_t>(*e.morse_index);
    if (c.size() <= m) c.resize(m + 1, 0);
    ++c[m];
  }
  return c;
}

FormulaReport formula_hypotheses(std::int64_t n, const CountingTable& table, const std::vector<std::int64_t>& betti,
                                 const std::vector<std::int64_t>& c) {
  FormulaReport f;
  f.n = n;
  const std::int64_t half = n / 2;
  f.prime_pi_n = table.prime_pi(n);
  f.prime_pi_half = table.prime_pi(half);

  std::size_t len = std::max<std::size_t>({betti.size(), c.size(), 1});
  while (static_cast<int>(len) < table.max_k() && table.pi_k(static_cast<int>(len) + 1, n, false) > 0) ++len;
  for (std::size_t k = 0; k < len; ++k) {
    const int arity = static_cast<int>(k) + 1;
    const bool in_table = arity <= table.max_k();
    f.pi_n.push_back(in_table ? table.pi_k(arity, n, false) : 0);
    f.pi_half.push_back(in_table ? table.pi_k(arity, half, false) : 0);
    f.odd_pi_n.push_back(in_table ? table.pi_k(arity, n, true) : 0);
    f.odd_pi_half.push_back(in_table ? table.pi_k(arity, half, true) : 0);
  }
  const auto b = padded(betti, len);
  const auto cc = padded(c, len);

  if (n < 4) {
    f.h1_exempt = true;
    f.h1 = true;
  } else {
    f.h1 = b[0] == 1 + f.prime_pi_n - f.prime_pi_half;
  }
  for (std::size_t m = 0; m < len; ++m)
    if (cc[m] != f.pi_n[m]) f.h2 = false;
  for (std::size_t k = 1; k < len; ++k) {
    const bool ok = b[k] == f.odd_pi_n[k] - f.odd_pi_half[k];
    f.h3_by_k.push_back(ok);
    if (!ok) f.h3 = false;
  }
  return f;
}

std::vector<std::int64_t> all_checkpoints(std::int64_t n_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= n_max; ++n) out.push_back(n);
  return out;
}

FiltrationResult run_filtration(const FiltrationConfig& config, const FactorSieve& sieve) {
  if (config.family == GraphFamily::Divisor)
    throw std::invalid_argument("filtrations are defined for the integer and prime families");
  if (config.n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  if (config.n_max > sieve.limit()) throw std::invalid_argument("n_max exceeds the sieve limit");
  if (!is_probable_prime(config.field_prime) || config.field_prime < 3 || config.field_prime >= (1u << 31))
    throw std::invalid_argument("field prime must be an odd prime below 2^31");

  std::vector<std::int64_t> checkpoints = config.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (!checkpoints.empty() && (checkpoints.front() < 2 || checkpoints.back() > config.n_max))
    throw std::invalid_argument("checkpoints must lie in [2, n_max]");

  FiltrationResult result;
  result.graph = build_graph({config.family, config.n_max}, sieve);
  const Graph& g = result.graph;
  const auto labels = g.labels();

  result.events.resize(g.order());
  parallel_for(g.order(), config.threads, [&](std::size_t i) {
    result.events[i] = classify_vertex(g, identity_function, labels[i], &sieve, config.recognizer);
  });

  // Distinct prefixes G(n) = {x <= n}; non-vertex checkpoints share the prefix before them.
  std::map<std::size_t, std::size_t> prefix_slot;
  std::vector<std::size_t> prefixes;
  std::vector<std::size_t> checkpoint_prefix;
  for (auto n : checkpoints) {
    const auto p = static_cast<std::size_t>(std::upper_bound(labels.begin(), labels.end(), n) - labels.begin());
    checkpoint_prefix.push_back(p);
    if (prefix_slot.emplace(p, prefixes.size()).second) prefixes.push_back(p);
  }

  struct PrefixData {
    bool ready = false;
    std::vector<std::size_t> f_vector;
    BettiVector betti;
    std::int64_t chi = 0;
  };
  std::vector<PrefixData> data(prefixes.size());
  // The store sees the smallest checkpoint n for each prefix.
  std::vector<std::int64_t> prefix_n(prefixes.size(), 0);
  for (std::size_t k = checkpoints.size(); k-- > 0;) prefix_n[prefix_slot[checkpoint_prefix[k]]] = checkpoints[k];

  if (config.store) {
    for (std::size_t s = 0; s < prefixes.size(); ++s) {
      if (auto rec = config.store->lookup(config.family, prefix_n[s], config.field_prime)) {
        data[s].ready = true;
        data[s].f_vector = rec->f_vector;
        data[s].betti.b = rec->betti;
        data[s].betti.field_prime = config.field_prime;
        data[s].chi = rec->chi;
      }
    }
  }

  parallel_for(prefixes.size(), config.threads, [&](std::size_t s) {
    if (data[s].ready) return;
    std::vector<std::size_t> idx(prefixes[s]);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto complex = whitney_complex(induced_subgraph_by_index(g, idx));
    data[s].f_vector = complex.f_vector();
    data[s].chi = euler_characteristic(complex);
    BettiOptions opts;
    opts.field_prime = config.field_prime;
    try {
      data[s].betti = betti_numbers(complex, opts);
    } catch (const RankDiscrepancyError& e) {
      throw RankDiscrepancyError(std::string(e.what()) + " at n = " + std::to_string(prefix_n[s]), e.prime());
    }
  });

  const CountingTable table(config.n_max, sieve);
  std::vector<std::int64_t> previous, births, deaths;
  std::int64_t ph_sum = 0;
  std::size_t events_seen = 0;
  std::vector<char> stored(prefixes.size(), 0);

  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    const auto n = checkpoints[k];
    const auto p = checkpoint_prefix[k];
    const auto slot = prefix_slot[p];
    const auto& d = data[slot];
    for (; events_seen < p; ++events_seen) ph_sum += result.events[events_seen].ph_index;

    MorseReport r;
    r.n = n;
    r.mertens = table.mertens(n);
    r.chi = d.chi;
    r.betti = d.betti;
    r.f_vector = d.f_vector;
    r.c = critical_counts(result.events, n);

    const auto len = std::max(previous.size(), d.betti.b.size());
    const auto now = padded(d.betti.b, len);
    previous = padded(std::move(previous), len);
    births = padded(std::move(births), len);
    deaths = padded(std::move(deaths), len);
    std::vector<std::int64_t> delta(len);
    for (std::size_t j = 0; j < len; ++j) {
      delta[j] = now[j] - previous[j];
      if (delta[j] > 0) births[j] += delta[j];
      if (delta[j] < 0) deaths[j] -= delta[j];
    }
    if (p > 0 && labels[p - 1] == n) result.events[p - 1].betti_delta = delta;
    previous = d.betti.b;
    r.births = births;
    r.deaths = deaths;

    r.mertens_euler = r.chi == 1 - r.mertens;
    r.poincare_hopf = ph_sum == r.chi;
    const auto ineq = morse_inequality_check(r.betti.b, r.c);
    r.weak = ineq.weak;
    r.strong = ineq.strong;
    r.r = ineq.r;
    r.formulas = formula_hypotheses(n, table, r.betti.b, r.c);

    if (config.store && !d.ready && !stored[slot]) {
      stored[slot] = 1;
      CheckpointRecord rec;
      rec.family = config.family;
      rec.n = n;
      rec.field_prime = config.field_prime;
      rec.f_vector = d.f_vector;
      rec.betti = d.betti.b;
      rec.chi = d.chi;
      rec.mertens = r.mertens;
      rec.c = r.c;
      config.store->store(rec);
    }
    result.reports.push_back(std::move(r));
  }
  return result;
}

std::size_t MorseComplex::count(int m) const {
  if (m < 0 || m > top_index()) return 0;
  return cells_[static_cast<std::size_t>(m)].size();
}

const SparseMatrix& MorseComplex::derivative(int m) const {
  if (m < 1 || m > top_index()) return empty_;
  return derivatives_[static_cast<std::size_t>(m)];
}

bool MorseComplex::squares_to_zero() const {
  for (int m = 1; m < top_index(); ++m)
    if (!derivative(m).multiply(derivative(m + 1)).is_zero()) return false;
  return true;
}

MorseComplex barycentric_morse_complex(const Graph& g) {
  const auto ref = barycentric_refinement_cells(g);
  const Graph& g1 = ref.graph;
  MorseComplex mc;
  // Refinement vertices come grouped by dimension, so a cell's position
  // within its index is its refinement index minus the group offset.
  std::vector<std::size_t> offset;
  std::vector<std::size_t> position(ref.cells.size());
  for (std::size_t v = 0; v < ref.cells.size(); ++v) {
    const auto m = ref.cells[v].size() - 1;
    if (m == mc.cells_.size()) {
      mc.cells_.emplace_back();
      offset.push_back(v);
    }
    position[v] = v - offset[m];
    mc.cells_[m].push_back(ref.cells[v]);
  }
  mc.derivatives_.resize(std::max<std::size_t>(mc.cells_.size(), 1));

  std::vector<std::uint32_t> rows;
  std::vector<std::int64_t> values;
  for (std::size_t m = 1; m < mc.cells_.size(); ++m) {
    auto& d = mc.derivatives_[m];
    d.rows = mc.cells_[m - 1].size();
    for (std::size_t v = offset[m]; v < offset[m] + mc.cells_[m].size(); ++v) {
      const auto& x = ref.cells[v];
      rows.clear();
      values.clear();
      // Neighbors one index lower in f = dim are exactly the facets.
      for (auto u : g1.neighbors(v)) {
        const auto& y = ref.cells[u];
        if (y.size() != m) continue;
        std::size_t omitted = 0;
        while (omitted < y.size() && y[omitted] == x[omitted]) ++omitted;
        rows.push_back(static_cast<std::uint32_t>(position[u]));
        values.push_back(omitted % 2 == 0 ? 1 : -1);
      }
      d.push_column(rows, values);
    }
  }
  return mc;
}

BettiVector morse_betti(const MorseComplex& m, BettiOptions options) {
  if (!m.squares_to_zero()) throw ConsistencyError("Morse derivative does not square to zero");
  std::vector<std::size_t> counts;
  std::vector<SparseMatrix> ds(std::max(m.top_index() + 1, 1));
  std::int64_t chi = 0;
  for (int k = 0; k <= m.top_index(); ++k) {
    counts.push_back(m.count(k));
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(m.count(k));
    if (k >= 1) ds[static_cast<std::size_t>(k)] = m.derivative(k);
  }
  return betti_numbers(ChainComplex::from_boundaries(std::move(counts), std::move(ds)), chi, options);
}

}  // namespace arithmorse
