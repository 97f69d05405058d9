#ifndef ARITHMORSE_COMPLEX_HPP
#define ARITHMORSE_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arithmorse/graph.hpp"

namespace arithmorse {

/**
 * Simplices of one dimension k, stored row-major with stride k + 1 and
 * sorted lexicographically, so a simplex's position doubles as its index.
 */
class SimplexTable {
 public:
  SimplexTable() = default;
  explicit SimplexTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t stride() const { return static_cast<std::size_t>(dim_ + 1); }
  std::size_t size() const { return data_.size() / stride(); }
  std::span<const Label> operator[](std::size_t i) const {
    return {data_.data() + i * stride(), stride()};
  }
  std::optional<std::size_t> find(std::span<const Label> simplex) const;

 private:
  friend class SimplicialComplex;
  int dim_ = 0;
  std::vector<Label> data_;
};

struct WhitneyOptions {
  /// Clique dimension cap; negative is unbounded.
  int dim_cap = -1;
  /// Throws ResourceLimitError once the clique count passes this.
  std::size_t max_simplices = 20'000'000;
};

/// Abstract simplicial complex on integer labels, closed under faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Sorts each simplex, removes duplicates, and throws std::invalid_argument
  /// if some face of a listed simplex is missing.
  static SimplicialComplex from_simplices(std::vector<std::vector<Label>> simplices);

  /// -1 for the empty complex.
  int top_dimension() const { return static_cast<int>(tables_.size()) - 1; }
  const SimplexTable& simplices(int k) const { return tables_.at(static_cast<std::size_t>(k)); }
  std::size_t count(int k) const;
  std::vector<std::size_t> f_vector() const;
  std::size_t total_size() const;
  std::vector<Label> vertices() const;

 private:
  friend SimplicialComplex whitney_complex(const Graph&, WhitneyOptions);
  static SimplicialComplex from_clique_tables(std::vector<std::vector<Label>> by_dim);

  std::vector<SimplexTable> tables_;
};

/// Clique complex of a graph.
SimplicialComplex whitney_complex(const Graph& g, WhitneyOptions options = {});

std::int64_t euler_characteristic(const SimplicialComplex& k);

/// {"fvector":[...],"simplices":[[...],...]} in dimension-then-lexicographic order.
std::string complex_to_json(const SimplicialComplex& k);

}  // namespace arithmorse

#endif  // ARITHMORSE_COMPLEX_HPP
