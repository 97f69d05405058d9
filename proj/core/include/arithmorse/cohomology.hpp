#ifndef ARITHMORSE_COHOMOLOGY_HPP
#define ARITHMORSE_COHOMOLOGY_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "arithmorse/complex.hpp"
#include "arithmorse/graph.hpp"
#include "arithmorse/rank.hpp"

namespace arithmorse {

/**
 * Boundary operators of a simplicial complex.
 *
 * boundary(k) for k >= 1 has shape count(k-1) x count(k). A k-simplex
 * x_0 < ... < x_k is oriented by ascending labels and its column carries
 * (-1)^i at the face that omits x_i.
 */
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& k);
  /// Cell counts per degree and boundaries[k] of shape counts[k-1] x counts[k];
  /// boundaries[0] is ignored. Throws std::invalid_argument on shape mismatch.
  static ChainComplex from_boundaries(std::vector<std::size_t> counts,
                                      std::vector<SparseMatrix> boundaries);

  int top_dimension() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t count(int k) const;
  /// Empty 0 x 0 matrix outside 1..top_dimension.
  const SparseMatrix& boundary(int k) const;
  /// Checks boundary(k) * boundary(k+1) == 0 exactly for every k.
  bool squares_to_zero() const;

 private:
  ChainComplex() = default;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> boundaries_;  // index k holds boundary(k); [0] unused
  SparseMatrix empty_;
};

struct BettiVector {
  std::vector<std::int64_t> b;
  std::uint32_t field_prime = kDefaultFieldPrime;
  bool verified_rational = false;

  std::int64_t at(std::size_t k) const { return k < b.size() ? b[k] : 0; }
  std::int64_t euler_characteristic() const;
};

struct BettiOptions {
  std::uint32_t field_prime = kDefaultFieldPrime;
  /// Complexes with at most this many simplices are rechecked over Q.
  std::size_t rational_threshold = 2000;
};

/// b_k = v_k - rank d_k - rank d_{k+1}. Trailing zeros above the top
/// dimension are omitted. Throws RankDiscrepancyError when GF(q) and
/// rational ranks disagree and ConsistencyError if Euler-Poincare fails.
BettiVector betti_numbers(const SimplicialComplex& k, BettiOptions options = {});
BettiVector betti_numbers(const ChainComplex& c, std::int64_t chi, BettiOptions options = {});

/// Ranks of boundary(1..top) over GF(prime), with clearing.
std::vector<std::size_t> boundary_ranks_mod_prime(const ChainComplex& c, std::uint32_t prime);
std::vector<std::size_t> boundary_ranks_rational(const ChainComplex& c);

struct SpectralOptions {
  /// Dense computations refuse complexes with more simplices than this.
  std::size_t dense_budget = 4000;
  /// Eigenvalues below tolerance * max(1, largest eigenvalue) count as zero.
  double tolerance = 1e-8;
};

/// Nullity of L_k = d_k^T d_k + d_{k+1} d_{k+1}^T, by dense eigenvalues.
std::size_t hodge_nullity(const SimplicialComplex& k, int dim, SpectralOptions options = {});

/**
 * Nullities of every block of the Witten-deformed Laplacian built from
 * d_s = e^{-s f} d e^{s f}; f is given per vertex label and extends to a
 * simplex by the maximum over its vertices. Default tolerance is 1e-6.
 */
std::vector<std::size_t> witten_nullity(const SimplicialComplex& k,
                                        const std::function<double(Label)>& f, double s,
                                        SpectralOptions options = {4000, 1e-6});

struct WuOptions {
  /// Refuses complexes with more simplices than this.
  std::size_t max_simplices = 2'000'000;
};

/// Sum over ordered pairs of intersecting simplices of (-1)^(dim x + dim y).
std::int64_t wu_characteristic(const SimplicialComplex& k, WuOptions options = {});

struct LefschetzNumber {
  /// Supertrace of the map induced on harmonic cochains.
  std::int64_t supertrace = 0;
  /// Sum over fixed simplices of (-1)^dim * sign(T restricted to the simplex).
  std::int64_t brouwer_sum = 0;
};

/// Throws std::invalid_argument unless T maps simplices onto simplices.
LefschetzNumber lefschetz_number(const SimplicialComplex& k, const VertexPermutation& t,
                                 SpectralOptions options = {});

}  // namespace arithmorse

#endif  // ARITHMORSE_COHOMOLOGY_HPP
