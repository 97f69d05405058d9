#ifndef ARITHMORSE_MORSE_HPP
#define ARITHMORSE_MORSE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arithmorse/arithmetic.hpp"
#include "arithmorse/cohomology.hpp"
#include "arithmorse/graph.hpp"
#include "arithmorse/rank.hpp"
#include "arithmorse/topology.hpp"

namespace arithmorse {

using VertexFunction = std::function<std::int64_t(Label)>;

/// f(x) = x, the counting function.
std::int64_t identity_function(Label x);

/// Subgraph of the unit sphere of x on neighbors y with f(y) < f(x).
/// Throws std::invalid_argument if some neighbor has f(y) == f(x).
Graph stable_sphere(const Graph& g, const VertexFunction& f, Label x);
/// Same with f(y) > f(x).
Graph unstable_sphere(const Graph& g, const VertexFunction& f, Label x);

enum class EventKind { Critical, HomotopyStep };
std::string to_string(EventKind kind);

struct FiltrationEvent {
  Label n = 0;
  /// Moebius value of the label, 0 when no sieve was supplied.
  int mu = 0;
  std::optional<int> stable_sphere_dim;
  std::optional<int> morse_index;
  int ph_index = 0;
  EventKind kind = EventKind::Critical;
  VerdictMethod method = VerdictMethod::ExactRecursion;
  /// b(G(n)) - b(G(previous checkpoint)); filled only when n is a checkpoint.
  std::vector<std::int64_t> betti_delta;
};

/**
 * Decides whether adding x attaches a ball (stable sphere is a sphere) or is
 * a homotopy step (stable sphere contractible). Throws ClassificationError
 * when the stable sphere is certified to be neither, and when the verdict is
 * Unknown.
 */
FiltrationEvent classify_vertex(const Graph& g, const VertexFunction& f, Label x,
                                const FactorSieve* sieve = nullptr, RecognizerConfig config = {});

struct MorseInequalities {
  bool weak = false;
  bool strong = false;
  /// r_k = sum_{j <= k} (-1)^(k-j) (c_j - b_j).
  std::vector<std::int64_t> r;
};

/// Shorter vector is padded with zeros.
MorseInequalities morse_inequality_check(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

/// c_m = number of Critical events with n <= limit and morse_index m.
std::vector<std::int64_t> critical_counts(const std::vector<FiltrationEvent>& events, Label limit);

struct FormulaReport {
  std::int64_t n = 0;
  /// b_0 = 1 + pi(n) - pi(n/2); rows with n < 4 are exempt and report true.
  bool h1 = true;
  bool h1_exempt = false;
  /// c_m = pi_{m+1}(n) for every m.
  bool h2 = true;
  /// b_k = odd pi_{k+1}(n) - odd pi_{k+1}(n/2) for k >= 1, per k and combined.
  std::vector<bool> h3_by_k;
  bool h3 = true;
  std::int64_t prime_pi_n = 0;
  std::int64_t prime_pi_half = 0;
  /// pi_{k+1}(n), pi_{k+1}(n/2) and their odd-only versions, k = 0..size-1.
  std::vector<std::int64_t> pi_n, pi_half, odd_pi_n, odd_pi_half;
};

/// Evaluates the closed-form hypotheses for degrees up to max(betti, c) length.
FormulaReport formula_hypotheses(std::int64_t n, const CountingTable& table,
                                 const std::vector<std::int64_t>& betti,
                                 const std::vector<std::int64_t>& c);

struct MorseReport {
  std::int64_t n = 0;
  std::int64_t mertens = 0;
  std::int64_t chi = 0;
  BettiVector betti;
  std::vector<std::size_t> f_vector;
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> r;
  /// Positive and negative parts of the Betti changes, summed over checkpoints <= n.
  std::vector<std::int64_t> births, deaths;
  bool mertens_euler = false;
  bool poincare_hopf = false;
  bool weak = false;
  bool strong = false;
  FormulaReport formulas;
  bool b0_formula() const { return formulas.h1; }
  bool bk_formula() const { return formulas.h3; }
};

/// Cached part of a checkpoint: everything derived from the complex of G(n).
struct CheckpointRecord {
  GraphFamily family = GraphFamily::Prime;
  std::int64_t n = 0;
  std::uint32_t field_prime = kDefaultFieldPrime;
  std::vector<std::size_t> f_vector;
  std::vector<std::int64_t> betti;
  std::int64_t chi = 0;
  std::int64_t mertens = 0;
  std::vector<std::int64_t> c;
};

/// Optional persistence for checkpoint results. Calls come from one thread.
class CheckpointStore {
 public:
  virtual ~CheckpointStore() = default;
  virtual std::optional<CheckpointRecord> lookup(GraphFamily family, std::int64_t n,
                                                 std::uint32_t field_prime) = 0;
  virtual void store(const CheckpointRecord& record) = 0;
};

struct FiltrationConfig {
  GraphFamily family = GraphFamily::Prime;
  std::int64_t n_max = 2;
  /// Values of n at which G(n) gets a full report; need not be vertex labels.
  std::vector<std::int64_t> checkpoints;
  std::uint32_t field_prime = kDefaultFieldPrime;
  unsigned threads = 1;
  RecognizerConfig recognizer;
  CheckpointStore* store = nullptr;
};

struct FiltrationResult {
  Graph graph;
  std::vector<FiltrationEvent> events;
  /// One per checkpoint, ascending in n.
  std::vector<MorseReport> reports;
};

/**
 * Morse filtration of Integer(n_max) or Prime(n_max) under f(x) = x. Results do
 * not depend on the thread count. Throws std::invalid_argument for the
 * divisor family, n_max < 2, or n_max beyond the sieve.
 */
FiltrationResult run_filtration(const FiltrationConfig& config, const FactorSieve& sieve);

/// Every n in [2, n_max].
std::vector<std::int64_t> all_checkpoints(std::int64_t n_max);

/**
 * Morse complex of f = dim on the Barycentric refinement of g. The critical
 * cells of index m are the m-simplices of g, and d_m maps index m cells to
 * their faces with sign (-1)^i for the face omitting the i-th vertex.
 */
class MorseComplex {
 public:
  int top_index() const { return static_cast<int>(cells_.size()) - 1; }
  /// Simplex of g behind each critical cell of index m, in refinement order.
  const std::vector<std::vector<Label>>& cells(int m) const { return cells_.at(static_cast<std::size_t>(m)); }
  std::size_t count(int m) const;
  /// cells(m-1) x cells(m); empty 0 x 0 outside 1..top_index.
  const SparseMatrix& derivative(int m) const;
  bool squares_to_zero() const;

 private:
  friend MorseComplex barycentric_morse_complex(const Graph& g);
  std::vector<std::vector<std::vector<Label>>> cells_;
  std::vector<SparseMatrix> derivatives_;
  SparseMatrix empty_;
};

MorseComplex barycentric_morse_complex(const Graph& g);

/// Throws ConsistencyError if d o d != 0 and RankDiscrepancyError as betti_numbers does.
BettiVector morse_betti(const MorseComplex& m, BettiOptions options = {});

}  // namespace arithmorse

#endif  // ARITHMORSE_MORSE_HPP
