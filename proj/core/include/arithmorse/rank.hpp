#ifndef ARITHMORSE_RANK_HPP
#define ARITHMORSE_RANK_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace arithmorse {

inline constexpr std::uint32_t kDefaultFieldPrime = 2147483647u;  // 2^31 - 1

/// Column-compressed sparse integer matrix; row indices ascend within a column.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> col_start{0};
  std::vector<std::uint32_t> row_index;
  std::vector<std::int64_t> value;

  std::size_t nonzeros() const { return row_index.size(); }
  /// Appends a column; entries must have ascending rows and nonzero values.
  void push_column(std::span<const std::uint32_t> rows_in, std::span<const std::int64_t> values_in);

  SparseMatrix transpose() const;
  /// Exact integer product this * rhs.
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  bool is_zero() const;
};

struct ModRankResult {
  std::size_t rank = 0;
  /// Row index of the pivot ("low") of every nonzero reduced column.
  std::vector<std::uint32_t> pivot_rows;
};

/**
 * Rank over GF(prime) by left-to-right column reduction on the lowest
 * nonzero row. Columns flagged in skip are treated as already reduced to
 * zero, which is how clearing feeds pivots of the next dimension down.
 * prime must be an odd prime below 2^31.
 */
ModRankResult rank_mod_prime(const SparseMatrix& m, std::uint32_t prime,
                             std::span<const char> skip = {});

/// Rank over the rationals by fraction-free integer column elimination,
/// with each reduced column divided by the gcd of its entries.
std::size_t rank_rational(const SparseMatrix& m);

bool is_probable_prime(std::uint64_t n);

}  // namespace arithmorse

#endif  // ARITHMORSE_RANK_HPP
