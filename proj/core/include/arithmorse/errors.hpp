#ifndef ARITHMORSE_ERRORS_HPP
#define ARITHMORSE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arithmorse {

// Invalid arguments are reported with std::invalid_argument and 64-bit
// overflow with std::overflow_error. The types below cover the failure modes
// that are specific to this library.

/// A configured budget (recursion cap, clique count, dense matrix size) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ranks over GF(q) and over the rationals disagreed.
class RankDiscrepancyError : public std::runtime_error {
 public:
  RankDiscrepancyError(const std::string& what, std::uint32_t prime)
      : std::runtime_error(what), prime_(prime) {}
  std::uint32_t prime() const { return prime_; }

 private:
  std::uint32_t prime_;
};

/// A filtration vertex whose stable sphere is neither a sphere nor contractible.
class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(const std::string& what, std::int64_t vertex)
      : std::runtime_error(what), vertex_(vertex) {}
  std::int64_t vertex() const { return vertex_; }

 private:
  std::int64_t vertex_;
};

/// An internal identity (d^2 = 0, Euler-Poincare, automorphism) failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arithmorse

#endif  // ARITHMORSE_ERRORS_HPP
