#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "arithmorse/cohomology.hpp"
#include "arithmorse/complex.hpp"
#include "arithmorse/corpus.hpp"
#include "arithmorse/morse.hpp"
#include "arithmorse/topology.hpp"
#include "commands.hpp"

namespace arithmorse::cli {

std::vector<std::string> known_checks() {
  return {"mertens", "hopf",     "morse-weak", "morse-strong", "diameter",
          "formulas", "morse-equiv", "kummer", "kunneth", "witten"};
}

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

class Verifier {
 public:
  // The sieve always covers Divisor(2310) for the kummer suite.
  Verifier(const RunConfig& config, std::int64_t n_max)
      : config_(config), n_max_(n_max), sieve_(std::max<std::int64_t>({n_max, 2310, config.sieve_limit.value_or(0)})) {}

  const FiltrationResult& filtration() {
    if (!filtration_) {
      FiltrationConfig fc;
      fc.family = GraphFamily::Prime;
      fc.n_max = n_max_;
      fc.checkpoints = all_checkpoints(n_max_);
      fc.field_prime = config_.field_prime;
      fc.threads = config_.threads;
      filtration_ = run_filtration(fc, sieve_);
    }
    return *filtration_;
  }

  Outcome report_check(const char* what, const std::function<bool(const MorseReport&)>& ok) {
    for (const auto& r : filtration().reports)
      if (!ok(r)) return {false, std::string(what) + " fails at n = " + std::to_string(r.n)};
    return {true, std::string(what) + " holds for 2 <= n <= " + std::to_string(n_max_)};
  }

  Outcome mertens() {
    return report_check("chi(G(n)) = 1 - M(n)", [](const MorseReport& r) { return r.mertens_euler; });
  }

  Outcome hopf() {
    auto o = report_check("sum of indices = chi", [](const MorseReport& r) { return r.poincare_hopf; });
    if (!o.pass) return o;
    for (const auto& e : filtration().events) {
      const int nu = prime_signature(e.n, sieve_).nu();
      if (e.ph_index != -e.mu) return {false, "index != -mu at x = " + std::to_string(e.n)};
      if (e.kind != EventKind::Critical || e.morse_index != nu - 1)
        return {false, "stable sphere of " + std::to_string(e.n) + " is not a (nu-2)-sphere"};
      if (nu <= 4 && e.method != VerdictMethod::ExactRecursion)
        return {false, "stable sphere of " + std::to_string(e.n) + " was not decided exactly"};
    }
    return {true, o.detail + "; index = -mu and stable spheres are (nu-2)-spheres for every vertex"};
  }

  Outcome weak() {
    return report_check("weak Morse inequalities", [](const MorseReport& r) { return r.weak; });
  }

  Outcome strong() {
    return report_check("strong Morse inequalities", [](const MorseReport& r) { return r.strong; });
  }

  Outcome formulas() {
    for (const auto& r : filtration().reports) {
      if (r.n >= 4 && !r.formulas.h1) return {false, "b0 formula fails at n = " + std::to_string(r.n)};
      if (!r.formulas.h2) return {false, "c_m = pi_{m+1}(n) fails at n = " + std::to_string(r.n)};
    }
    // The odd-prime reading of the b_k formula is asserted only once it has
    // matched the Betti numbers on the validation range.
    const std::int64_t validate_to = std::min<std::int64_t>(500, n_max_);
    std::optional<std::int64_t> first_miss;
    std::size_t misses = 0;
    for (const auto& r : filtration().reports) {
      if (r.n < 4 || r.formulas.h3) continue;
      ++misses;
      if (!first_miss) first_miss = r.n;
    }
    std::ostringstream os;
    os << "b0 formula holds for 4 <= n <= " << n_max_ << ", c_m = pi_{m+1}(n) everywhere; ";
    if (!first_miss) {
      os << "b_k formula validated on 4..." << validate_to << " and asserted to " << n_max_;
      return {true, os.str()};
    }
    if (*first_miss > validate_to) {
      os << "b_k formula validated on 4..." << validate_to << " but fails at n = " << *first_miss;
      return {false, os.str()};
    }
    os << "b_k formula not validated (" << misses << " mismatches, first at n = " << *first_miss
       << "); reported only";
    return {true, os.str()};
  }

  Outcome diameter() {
    const Graph g = build_graph({GraphFamily::Prime, n_max_}, sieve_);
    const auto labels = g.labels();
    std::vector<int> dist(g.order(), -1);
    std::vector<char> in_main(g.order(), 0);
    std::vector<std::size_t> queue;
    // BFS inside the first p vertices; returns the eccentricity and fills dist.
    auto bfs = [&](std::size_t source, std::size_t p) {
      std::fill(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(p), -1);
      queue.assign(1, source);
      dist[source] = 0;
      int ecc = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const auto v = queue[h];
        for (auto u : g.neighbors(v)) {
          if (u >= p || dist[u] >= 0) continue;
          dist[u] = dist[v] + 1;
          ecc = std::max(ecc, dist[u]);
          queue.push_back(u);
        }
      }
      return ecc;
    };
    // A pair's distance can only shrink as vertices are added, so it suffices
    // to bound the eccentricity of each vertex when it joins the component of 2.
    int worst = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto p = i + 1;
      bfs(i, p);
      if (dist[0] < 0) continue;
      std::vector<std::size_t> joined;
      for (auto v : queue)
        if (!in_main[v]) joined.push_back(v);
      for (auto v : joined) {
        in_main[v] = 1;
        const int ecc = bfs(v, p);
        worst = std::max(worst, ecc);
        if (labels[i] >= 4 && ecc > 5)
          return {false, "diameter bound fails at n = " + std::to_string(labels[i])};
      }
    }
    std::ostringstream os;
    os << "component of 2 has diameter <= 5 for 4 <= n <= " << n_max_ << " (max newcomer eccentricity " << worst
       << ")";
    for (std::int64_t n : {15, 100, 500, 1000, 2310}) {
      if (n > n_max_) continue;
      const auto d = component_diameter(build_graph({GraphFamily::Prime, n}, sieve_), 2);
      if (d > 5) return {false, "diameter bound fails at n = " + std::to_string(n)};
      os << "; diam(" << n << ")=" << d;
    }
    if (n_max_ > 15 && n_max_ != 100 && n_max_ != 500 && n_max_ != 1000 && n_max_ != 2310) {
      const auto d = component_diameter(g, 2);
      if (d > 5) return {false, "diameter bound fails at n = " + std::to_string(n_max_)};
      os << "; diam(" << n_max_ << ")=" << d;
    }
    return {true, os.str()};
  }

  Outcome morse_equiv() {
    std::vector<std::pair<std::string, Graph>> graphs;
    for (auto& g : connected_graphs(7)) graphs.emplace_back("corpus graph", std::move(g));
    const std::int64_t prime_to = std::min<std::int64_t>(120, n_max_);
    for (std::int64_t n = 2; n <= prime_to; ++n)
      if (n == 2 || sieve_.is_squarefree(n))
        graphs.emplace_back("Prime(" + std::to_string(n) + ")", build_graph({GraphFamily::Prime, n}, sieve_));
    BettiOptions opts;
    opts.field_prime = config_.field_prime;
    std::size_t index = 0;
    for (const auto& [name, g] : graphs) {
      ++index;
      const auto b = betti_numbers(whitney_complex(g), opts).b;
      const auto mc = barycentric_morse_complex(g);
      if (!mc.squares_to_zero()) return {false, "d o d != 0 for " + name + " #" + std::to_string(index)};
      const auto mb = morse_betti(mc, opts).b;
      if (mb != b) return {false, "Morse Betti " + join(mb) + " != " + join(b) + " for " + name};
      const auto b1 = betti_numbers(whitney_complex(barycentric_refinement(g)), opts).b;
      if (b1 != b) return {false, "Betti of the refinement differs for " + name};
    }
    return {true, "Morse and simplicial Betti agree, and b(G) = b(G1), on " + std::to_string(graphs.size()) +
                      " graphs (connected graphs on <= 7 vertices, Prime(n) for n <= " +
                      std::to_string(prime_to) + ")"};
  }

  Outcome kummer() {
    std::vector<int> ds = config_.d.empty() ? std::vector<int>{3, 4, 5} : config_.d;
    std::ostringstream os;
    for (int d : ds) {
      if (d < 2 || d > 5) throw UsageError("--d must lie in 2..5");
      const auto m = primorial(d);
      if (m > sieve_.limit()) throw UsageError("--d " + std::to_string(d) + " needs --n-max >= " + std::to_string(m));
      const Graph g = build_graph({GraphFamily::Divisor, m}, sieve_);
      const auto v = sphere_dimension(g);
      const auto k = whitney_complex(g);
      const auto b = betti_numbers(k).b;
      const std::string at = "Divisor(" + std::to_string(m) + ")";
      if (!v.is_sphere_of(d - 2)) return {false, at + " is not a " + std::to_string(d - 2) + "-sphere"};
      std::vector<std::int64_t> want(static_cast<std::size_t>(d - 1), 0);
      want.front() += 1;
      want.back() += 1;
      if (b != want) return {false, at + " has Betti numbers " + join(b)};
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != b[b.size() - 1 - i]) return {false, at + " violates duality"};
      const auto t = kummer_involution(m, sieve_);
      if (!is_automorphism(g, t) || !t.compose(t).is_identity())
        return {false, at + ": k -> m/k is not an involutive automorphism"};
      const auto l = lefschetz_number(k, t);
      if (l.supertrace != l.brouwer_sum || l.supertrace != 0)
        return {false, at + ": Lefschetz supertrace " + std::to_string(l.supertrace) + ", fixed-simplex sum " +
                           std::to_string(l.brouwer_sum)};
      os << at << ": sphere dim " << v.dimension << " (" << to_string(v.method) << "), betti " << join(b)
         << ", duality ok, involution ok, lefschetz (" << l.supertrace << "," << l.brouwer_sum << "); ";
    }
    auto s = os.str();
    if (s.size() >= 2) s.resize(s.size() - 2);
    return {true, s};
  }

  Outcome kunneth() {
    const std::vector<std::pair<std::string, Graph>> base = {{"K1", complete_graph(1)},
                                                             {"K2", complete_graph(2)},
                                                             {"K3", complete_graph(3)},
                                                             {"C4", cycle_graph(4)},
                                                             {"C5", cycle_graph(5)}};
    std::size_t pairs = 0;
    for (const auto& [gn, g] : base) {
      const auto bg = betti_numbers(whitney_complex(g)).b;
      const auto dg = inductive_dimension(g);
      for (const auto& [hn, h] : base) {
        const auto bh = betti_numbers(whitney_complex(h)).b;
        const Graph p = graph_product(g, h);
        const auto kp = whitney_complex(p);
        const std::string at = gn + " x " + hn;
        if (euler_characteristic(kp) != euler_characteristic(g) * euler_characteristic(h))
          return {false, "chi is not multiplicative for " + at};
        std::vector<std::int64_t> conv(bg.size() + bh.size() - 1, 0);
        for (std::size_t i = 0; i < bg.size(); ++i)
          for (std::size_t j = 0; j < bh.size(); ++j) conv[i + j] += bg[i] * bh[j];
        while (!conv.empty() && conv.back() == 0) conv.pop_back();
        const auto bp = betti_numbers(kp).b;
        if (bp != conv) return {false, "Kunneth fails for " + at + ": " + join(bp) + " vs " + join(conv)};
        if (inductive_dimension(p) < dg + inductive_dimension(h))
          return {false, "dim(G x H) < dim G + dim H for " + at};
        ++pairs;
      }
    }
    return {true, "chi multiplicative, Kunneth convolution and dimension inequality on " + std::to_string(pairs) +
                      " product pairs"};
  }

  Outcome witten() {
    std::vector<std::pair<std::string, Graph>> graphs;
    const std::int64_t prime_to = std::min<std::int64_t>(60, n_max_);
    for (std::int64_t n = 2; n <= prime_to; ++n)
      if (n == 2 || sieve_.is_squarefree(n))
        graphs.emplace_back("Prime(" + std::to_string(n) + ")", build_graph({GraphFamily::Prime, n}, sieve_));
    for (auto& g : connected_graphs(7)) graphs.emplace_back("corpus graph", std::move(g));
    for (const auto& [name, g] : graphs) {
      const auto k = whitney_complex(g);
      // f(x) = x rescaled to [0, 1]; raw labels make the deformation badly conditioned.
      const double lo = static_cast<double>(g.labels().front());
      const double span = std::max(1.0, static_cast<double>(g.labels().back()) - lo);
      const auto f = [&](Label x) { return (static_cast<double>(x) - lo) / span; };
      const auto b = betti_numbers(k).b;
      const auto top = static_cast<std::size_t>(std::max(k.top_dimension(), 0)) + 1;
      std::vector<std::int64_t> hodge;
      for (int d = 0; d <= k.top_dimension(); ++d) hodge.push_back(static_cast<std::int64_t>(hodge_nullity(k, d)));
      if (padded(hodge, top) != padded(b, top)) return {false, "Hodge nullities differ from Betti for " + name};
      for (double s : {0.0, 0.5, 1.0}) {
        const auto w = witten_nullity(k, f, s);
        std::vector<std::int64_t> wi(w.begin(), w.end());
        if (padded(wi, top) != padded(b, top))
          return {false, "Witten kernel changes at s = " + std::to_string(s) + " for " + name};
      }
    }
    return {true, "Hodge nullities = Betti numbers and Witten kernels constant for s in {0, 0.5, 1} on " +
                      std::to_string(graphs.size()) + " graphs"};
  }

 private:
  const RunConfig& config_;
  std::int64_t n_max_;
  FactorSieve sieve_;
  std::optional<FiltrationResult> filtration_;
};

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto n_max = config.n_max.value_or(2310);
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  if (config.sieve_limit && *config.sieve_limit < n_max) throw UsageError("--n-max exceeds --sieve-limit");
  auto checks = config.checks.empty() ? known_checks() : config.checks;
  Verifier v(config, n_max);
  const std::map<std::string, std::function<Outcome()>> suites = {
      {"mertens", [&] { return v.mertens(); }},     {"hopf", [&] { return v.hopf(); }},
      {"morse-weak", [&] { return v.weak(); }},     {"morse-strong", [&] { return v.strong(); }},
      {"diameter", [&] { return v.diameter(); }},   {"formulas", [&] { return v.formulas(); }},
      {"morse-equiv", [&] { return v.morse_equiv(); }}, {"kummer", [&] { return v.kummer(); }},
      {"kunneth", [&] { return v.kunneth(); }},     {"witten", [&] { return v.witten(); }},
  };
  std::size_t passed = 0;
  for (const auto& name : checks) {
    const auto it = suites.find(name);
    if (it == suites.end()) throw UsageError("unknown check " + name);
    const auto o = it->second();
    out << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << "\n";
    out.flush();
    if (o.pass) ++passed;
  }
  out << passed << "/" << checks.size() << " suites passed\n";
  return passed == checks.size() ? kExitOk : kExitFailure;
}

}  // namespace arithmorse::cli
