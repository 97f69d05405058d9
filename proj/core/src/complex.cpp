#include "arithmorse/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "arithmorse/errors.hpp"

namespace arithmorse {

std::optional<std::size_t> SimplexTable::find(std::span<const Label> simplex) const {
  if (simplex.size() != stride() || data_.empty()) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), simplex.begin(), simplex.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == size()) return std::nullopt;
  auto row = (*this)[lo];
  if (!std::equal(row.begin(), row.end(), simplex.begin())) return std::nullopt;
  return lo;
}

namespace {

// Sorts the rows of a flat table lexicographically and drops duplicates.
void sort_rows(std::vector<Label>& data, std::size_t stride) {
  const std::size_t rows = data.size() / stride;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return data.begin() + static_cast<std::ptrdiff_t>(i * stride); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(stride), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(stride));
  });
  std::vector<Label> sorted;
  sorted.reserve(data.size());
  for (std::size_t k = 0; k < rows; ++k) {
    auto r = row(order[k]);
    if (k > 0 && std::equal(r, r + static_cast<std::ptrdiff_t>(stride),
                            sorted.end() - static_cast<std::ptrdiff_t>(stride)))
      continue;
    sorted.insert(sorted.end(), r, r + static_cast<std::ptrdiff_t>(stride));
  }
  data.swap(sorted);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::vector<Label>> simplices) {
  SimplicialComplex k;
  for (auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplex with repeated vertex");
    const int dim = static_cast<int>(s.size()) - 1;
    while (k.top_dimension() < dim) k.tables_.emplace_back(k.top_dimension() + 1);
    auto& data = k.tables_[static_cast<std::size_t>(dim)].data_;
    data.insert(data.end(), s.begin(), s.end());
  }
  for (auto& t : k.tables_) sort_rows(t.data_, t.stride());
  // Closure: every facet of a k-simplex must be a (k-1)-simplex.
  std::vector<Label> face;
  for (int d = 1; d <= k.top_dimension(); ++d) {
    const auto& t = k.tables_[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto s = t[i];
      for (std::size_t omit = 0; omit < s.size(); ++omit) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != omit) face.push_back(s[j]);
        if (!k.tables_[static_cast<std::size_t>(d - 1)].find(face))
          throw std::invalid_argument("complex is not closed under faces");
      }
    }
  }
  return k;
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return tables_[static_cast<std::size_t>(k)].size();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& t : tables_) f.push_back(t.size());
  return f;
}

std::size_t SimplicialComplex::total_size() const {
  std::size_t n = 0;
  for (const auto& t : tables_) n += t.size();
  return n;
}

std::vector<Label> SimplicialComplex::vertices() const {
  if (tables_.empty()) return {};
  return tables_[0].data_;
}

SimplicialComplex whitney_complex(const Graph& g, WhitneyOptions options) {
  std::vector<std::vector<Label>> by_dim;
  std::size_t total = 0;
  for_each_clique(g, options.dim_cap, [&](std::span<const std::uint32_t> c) {
    if (++total > options.max_simplices)
      throw ResourceLimitError("clique count exceeds budget of " +
                               std::to_string(options.max_simplices));
    const std::size_t dim = c.size() - 1;
    if (by_dim.size() <= dim) by_dim.resize(dim + 1);
    for (auto v : c) by_dim[dim].push_back(g.label(v));
  });
  return SimplicialComplex::from_clique_tables(std::move(by_dim));
}

SimplicialComplex SimplicialComplex::from_clique_tables(std::vector<std::vector<Label>> by_dim) {
  // Clique enumeration yields every face, so no closure check is needed.
  SimplicialComplex k;
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    SimplexTable t(static_cast<int>(d));
    t.data_ = std::move(by_dim[d]);
    sort_rows(t.data_, t.stride());
    k.tables_.push_back(std::move(t));
  }
  return k;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.top_dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.count(d));
  return chi;
}

std::string complex_to_json(const SimplicialComplex& k) {
  nlohmann::ordered_json j;
  j["fvector"] = k.f_vector();
  auto simplices = nlohmann::ordered_json::array();
  for (int d = 0; d <= k.top_dimension(); ++d) {
    const auto& t = k.simplices(d);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto s = t[i];
      simplices.push_back(std::vector<Label>(s.begin(), s.end()));
    }
  }
  j["simplices"] = std::move(simplices);
  return j.dump();
}

}  // namespace arithmorse
