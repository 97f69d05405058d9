#include "arithmorse/rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <gmpxx.h>

namespace arithmorse {

void SparseMatrix::push_column(std::span<const std::uint32_t> rows_in,
                               std::span<const std::int64_t> values_in) {
  if (rows_in.size() != values_in.size()) throw std::invalid_argument("column size mismatch");
  for (std::size_t k = 0; k < rows_in.size(); ++k) {
    if (rows_in[k] >= rows) throw std::invalid_argument("row index out of range");
    if (k > 0 && rows_in[k] <= rows_in[k - 1]) throw std::invalid_argument("rows must ascend");
    if (values_in[k] == 0) throw std::invalid_argument("explicit zero entry");
  }
  row_index.insert(row_index.end(), rows_in.begin(), rows_in.end());
  value.insert(value.end(), values_in.begin(), values_in.end());
  col_start.push_back(row_index.size());
  ++cols;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t;
  t.rows = cols;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> out(rows);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t k = col_start[c]; k < col_start[c + 1]; ++k)
      out[row_index[k]].emplace_back(static_cast<std::uint32_t>(c), value[k]);
  std::vector<std::uint32_t> r;
  std::vector<std::int64_t> v;
  for (auto& col : out) {
    r.clear();
    v.clear();
    for (auto& [i, x] : col) {
      r.push_back(i);
      v.push_back(x);
    }
    t.push_column(r, v);
  }
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix shapes do not compose");
  SparseMatrix out;
  out.rows = rows;
  std::vector<std::int64_t> acc(rows, 0);
  std::vector<std::uint32_t> touched, r;
  std::vector<std::int64_t> v;
  for (std::size_t c = 0; c < rhs.cols; ++c) {
    touched.clear();
    for (std::size_t k = rhs.col_start[c]; k < rhs.col_start[c + 1]; ++k) {
      const auto mid = rhs.row_index[k];
      for (std::size_t q = col_start[mid]; q < col_start[mid + 1]; ++q) {
        if (acc[row_index[q]] == 0) touched.push_back(row_index[q]);
        acc[row_index[q]] += value[q] * rhs.value[k];
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    r.clear();
    v.clear();
    for (auto i : touched) {
      if (acc[i] != 0) {
        r.push_back(i);
        v.push_back(acc[i]);
      }
      acc[i] = 0;
    }
    out.push_column(r, v);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(value.begin(), value.end(), [](std::int64_t x) { return x == 0; });
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (row, value mod p)

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t to_field(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

ModRankResult rank_mod_prime(const SparseMatrix& m, std::uint32_t prime, std::span<const char> skip) {
  if (prime < 3 || prime >= (1u << 31) || !is_probable_prime(prime))
    throw std::invalid_argument("field prime must be an odd prime below 2^31");
  if (!skip.empty() && skip.size() != m.cols) throw std::invalid_argument("skip mask size mismatch");

  // reduced[r] holds the reduced column whose pivot is row r, scaled to pivot 1.
  std::vector<std::vector<Entry>> reduced(m.rows);
  std::vector<char> has_pivot(m.rows, 0);
  ModRankResult result;
  std::vector<Entry> col, merged;

  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!skip.empty() && skip[c]) continue;
    col.clear();
    for (std::size_t k = m.col_start[c]; k < m.col_start[c + 1]; ++k) {
      const auto v = to_field(m.value[k], prime);
      if (v != 0) col.emplace_back(m.row_index[k], v);
    }
    while (!col.empty() && has_pivot[col.back().first]) {
      const auto& piv = reduced[col.back().first];
      const std::uint32_t factor = prime - col.back().second;  // col += factor * piv
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.emplace_back(piv[j].first, mulmod(factor, piv[j].second, prime));
          ++j;
        } else {
          const std::uint32_t v = (col[i].second + mulmod(factor, piv[j].second, prime)) % prime;
          if (v != 0) merged.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col.swap(merged);
    }
    if (col.empty()) continue;
    const std::uint32_t low = col.back().first;
    const std::uint32_t inv = powmod(col.back().second, prime - 2, prime);
    for (auto& e : col) e.second = mulmod(e.second, inv, prime);
    reduced[low] = col;
    has_pivot[low] = 1;
    result.pivot_rows.push_back(low);
    ++result.rank;
  }
  return result;
}

std::size_t rank_rational(const SparseMatrix& m) {
  using Column = std::vector<std::pair<std::uint32_t, mpz_class>>;
  std::vector<Column> reduced(m.rows);
  std::vector<char> has_pivot(m.rows, 0);
  std::size_t rank = 0;
  Column col, merged;
  mpz_class a, b, g, t;

  for (std::size_t c = 0; c < m.cols; ++c) {
    col.clear();
    for (std::size_t k = m.col_start[c]; k < m.col_start[c + 1]; ++k)
      if (m.value[k] != 0) col.emplace_back(m.row_index[k], mpz_class(static_cast<long>(m.value[k])));
    while (!col.empty() && has_pivot[col.back().first]) {
      const auto& piv = reduced[col.back().first];
      // col <- a * col - b * piv, which clears the shared lowest row.
      a = piv.back().second;
      b = col.back().second;
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.emplace_back(col[i].first, a * col[i].second);
          ++i;
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.emplace_back(piv[j].first, -b * piv[j].second);
          ++j;
        } else {
          t = a * col[i].second - b * piv[j].second;
          if (t != 0) merged.emplace_back(col[i].first, t);
          ++i;
          ++j;
        }
      }
      g = 0;
      for (const auto& e : merged) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g > 1)
        for (auto& e : merged) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
      col.swap(merged);
    }
    if (col.empty()) continue;
    const auto low = col.back().first;
    reduced[low] = col;
    has_pivot[low] = 1;
    ++rank;
  }
  return rank;
}

}  // namespace arithmorse
