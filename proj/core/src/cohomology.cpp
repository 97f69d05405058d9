#include "arithmorse/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "arithmorse/errors.hpp"

namespace arithmorse {

ChainComplex::ChainComplex(const SimplicialComplex& k) {
  const int top = k.top_dimension();
  for (int d = 0; d <= top; ++d) dims_.push_back(k.count(d));
  boundaries_.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
  std::vector<Label> face;
  std::vector<std::uint32_t> rows;
  std::vector<std::int64_t> values;
  for (int d = 1; d <= top; ++d) {
    auto& m = boundaries_[static_cast<std::size_t>(d)];
    m.rows = k.count(d - 1);
    const auto& faces = k.simplices(d - 1);
    const auto& cells = k.simplices(d);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto s = cells[c];
      rows.clear();
      values.clear();
      // Omitting a later vertex gives a lexicographically smaller face, so
      // walking i downward produces ascending rows.
      for (std::size_t i = s.size(); i-- > 0;) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        const auto row = faces.find(face);
        if (!row) throw ConsistencyError("missing face while building boundary");
        rows.push_back(static_cast<std::uint32_t>(*row));
        values.push_back(i % 2 == 0 ? 1 : -1);
      }
      m.push_column(rows, values);
    }
  }
}

ChainComplex ChainComplex::from_boundaries(std::vector<std::size_t> counts,
                                           std::vector<SparseMatrix> boundaries) {
  if (boundaries.size() != std::max<std::size_t>(counts.size(), 1))
    throw std::invalid_argument("need one boundary slot per degree");
  for (std::size_t k = 1; k < counts.size(); ++k)
    if (boundaries[k].rows != counts[k - 1] || boundaries[k].cols != counts[k])
      throw std::invalid_argument("boundary " + std::to_string(k) + " has the wrong shape");
  ChainComplex c;
  c.dims_ = std::move(counts);
  c.boundaries_ = std::move(boundaries);
  return c;
}

std::size_t ChainComplex::count(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

const SparseMatrix& ChainComplex::boundary(int k) const {
  if (k < 1 || k > top_dimension()) return empty_;
  return boundaries_[static_cast<std::size_t>(k)];
}

bool ChainComplex::squares_to_zero() const {
  for (int k = 1; k < top_dimension(); ++k)
    if (!boundary(k).multiply(boundary(k + 1)).is_zero()) return false;
  return true;
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b[k];
  return chi;
}

std::vector<std::size_t> boundary_ranks_mod_prime(const ChainComplex& c, std::uint32_t prime) {
  const int top = c.top_dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
  std::vector<char> skip;
  for (int k = top; k >= 1; --k) {
    const auto& m = c.boundary(k);
    if (skip.size() != m.cols) skip.assign(m.cols, 0);
    const auto result = rank_mod_prime(m, prime, skip);
    ranks[static_cast<std::size_t>(k)] = result.rank;
    // Faces that are pivots here reduce to zero in the next dimension down.
    skip.assign(m.rows, 0);
    for (auto r : result.pivot_rows) skip[r] = 1;
  }
  return ranks;
}

std::vector<std::size_t> boundary_ranks_rational(const ChainComplex& c) {
  const int top = c.top_dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
  for (int k = 1; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = rank_rational(c.boundary(k));
  return ranks;
}

BettiVector betti_numbers(const ChainComplex& c, std::int64_t chi, BettiOptions options) {
  BettiVector out;
  out.field_prime = options.field_prime;
  const int top = c.top_dimension();
  if (top < 0) return out;
  const auto ranks = boundary_ranks_mod_prime(c, options.field_prime);
  std::size_t total = 0;
  for (int k = 0; k <= top; ++k) total += c.count(k);
  if (total <= options.rational_threshold) {
    const auto exact = boundary_ranks_rational(c);
    for (int k = 1; k <= top; ++k)
      if (exact[static_cast<std::size_t>(k)] != ranks[static_cast<std::size_t>(k)])
        throw RankDiscrepancyError("rank of boundary " + std::to_string(k) + " over GF(" +
                                       std::to_string(options.field_prime) +
                                       ") differs from the rational rank",
                                   options.field_prime);
    out.verified_rational = true;
  }
  for (int k = 0; k <= top; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    out.b.push_back(static_cast<std::int64_t>(c.count(k)) - static_cast<std::int64_t>(ranks[uk]) -
                    static_cast<std::int64_t>(ranks[uk + 1]));
  }
  while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
  if (out.euler_characteristic() != chi)
    throw ConsistencyError("Euler-Poincare identity failed");
  return out;
}

BettiVector betti_numbers(const SimplicialComplex& k, BettiOptions options) {
  return betti_numbers(ChainComplex(k), euler_characteristic(k), options);
}

namespace {

Eigen::MatrixXd dense(const SparseMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows),
                                              static_cast<Eigen::Index>(m.cols));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (std::size_t k = m.col_start[c]; k < m.col_start[c + 1]; ++k)
      out(m.row_index[k], static_cast<Eigen::Index>(c)) = static_cast<double>(m.value[k]);
  return out;
}

void require_budget(const SimplicialComplex& k, const SpectralOptions& options) {
  if (k.total_size() > options.dense_budget)
    throw ResourceLimitError("complex has " + std::to_string(k.total_size()) +
                             " simplices, dense budget is " + std::to_string(options.dense_budget));
}

std::size_t count_null(const Eigen::VectorXd& eigenvalues, double tolerance) {
  if (eigenvalues.size() == 0) return 0;
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
  std::size_t n = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (std::abs(eigenvalues[i]) <= tolerance * scale) ++n;
  return n;
}

// Dense Hodge block of dimension k from coboundaries d_{k-1}: C^{k-1} -> C^k
// and d_k: C^k -> C^{k+1} (either may be empty).
Eigen::MatrixXd laplace_block(const Eigen::MatrixXd& d_below, const Eigen::MatrixXd& d_here,
                              Eigen::Index n) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  if (d_here.size() > 0) l += d_here.transpose() * d_here;
  if (d_below.size() > 0) l += d_below * d_below.transpose();
  return l;
}

// coboundary[k] = transpose of boundary(k+1), shape count(k+1) x count(k).
std::vector<Eigen::MatrixXd> coboundaries(const ChainComplex& c) {
  std::vector<Eigen::MatrixXd> out;
  for (int k = 0; k < c.top_dimension(); ++k) out.push_back(dense(c.boundary(k + 1)).transpose());
  return out;
}

}  // namespace

std::size_t hodge_nullity(const SimplicialComplex& k, int dim, SpectralOptions options) {
  require_budget(k, options);
  if (dim < 0 || dim > k.top_dimension()) return 0;
  const ChainComplex c(k);
  const auto d = coboundaries(c);
  const auto n = static_cast<Eigen::Index>(k.count(dim));
  const Eigen::MatrixXd below = dim >= 1 ? d[static_cast<std::size_t>(dim - 1)] : Eigen::MatrixXd();
  const Eigen::MatrixXd here = dim < k.top_dimension() ? d[static_cast<std::size_t>(dim)] : Eigen::MatrixXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplace_block(below, here, n),
                                                        Eigen::EigenvaluesOnly);
  return count_null(solver.eigenvalues(), options.tolerance);
}

std::vector<std::size_t> witten_nullity(const SimplicialComplex& k,
                                        const std::function<double(Label)>& f, double s,
                                        SpectralOptions options) {
  require_budget(k, options);
  const int top = k.top_dimension();
  if (top < 0) return {};
  // weight[k][i] = exp(s * max of f over the vertices of simplex i)
  std::vector<Eigen::VectorXd> weight;
  for (int d = 0; d <= top; ++d) {
    const auto& t = k.simplices(d);
    Eigen::VectorXd w(static_cast<Eigen::Index>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) {
      double m = -INFINITY;
      for (auto v : t[i]) m = std::max(m, f(v));
      w[static_cast<Eigen::Index>(i)] = std::exp(s * m);
    }
    weight.push_back(std::move(w));
  }
  const ChainComplex c(k);
  auto d = coboundaries(c);
  for (int j = 0; j < top; ++j) {
    auto& m = d[static_cast<std::size_t>(j)];
    m = weight[static_cast<std::size_t>(j + 1)].cwiseInverse().asDiagonal() * m *
        weight[static_cast<std::size_t>(j)].asDiagonal();
  }
  std::vector<std::size_t> out;
  for (int j = 0; j <= top; ++j) {
    const auto n = static_cast<Eigen::Index>(k.count(j));
    const Eigen::MatrixXd below = j >= 1 ? d[static_cast<std::size_t>(j - 1)] : Eigen::MatrixXd();
    const Eigen::MatrixXd here = j < top ? d[static_cast<std::size_t>(j)] : Eigen::MatrixXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplace_block(below, here, n),
                                                          Eigen::EigenvaluesOnly);
    out.push_back(count_null(solver.eigenvalues(), options.tolerance));
  }
  return out;
}

std::int64_t wu_characteristic(const SimplicialComplex& k, WuOptions options) {
  if (k.total_size() > options.max_simplices)
    throw ResourceLimitError("Wu characteristic budget exceeded");
  // [x meets y] = sum over nonempty z in x and y of (-1)^(|z|+1), so
  // omega = sum_z (-1)^(|z|+1) * (sum over x containing z of (-1)^dim x)^2.
  std::vector<std::vector<std::int64_t>> star(static_cast<std::size_t>(k.top_dimension() + 1));
  for (int d = 0; d <= k.top_dimension(); ++d) star[static_cast<std::size_t>(d)].assign(k.count(d), 0);
  std::vector<Label> face;
  for (int d = 0; d <= k.top_dimension(); ++d) {
    const auto& t = k.simplices(d);
    const std::int64_t sign = d % 2 == 0 ? 1 : -1;
    const std::size_t full = (std::size_t{1} << (d + 1)) - 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto s = t[i];
      for (std::size_t mask = 1; mask <= full; ++mask) {
        face.clear();
        for (std::size_t b = 0; b < s.size(); ++b)
          if (mask >> b & 1) face.push_back(s[b]);
        const int fd = static_cast<int>(face.size()) - 1;
        star[static_cast<std::size_t>(fd)][*k.simplices(fd).find(face)] += sign;
      }
    }
  }
  std::int64_t omega = 0;
  for (int d = 0; d <= k.top_dimension(); ++d) {
    const std::int64_t sign = d % 2 == 0 ? 1 : -1;  // (-1)^(|z|+1) with |z| = d + 1
    for (auto v : star[static_cast<std::size_t>(d)]) omega += sign * v * v;
  }
  return omega;
}

namespace {

// Image of a simplex under t: sorted labels and the sign of the sorting permutation.
std::pair<std::vector<Label>, int> image_of(std::span<const Label> s, const VertexPermutation& t) {
  std::vector<Label> img;
  img.reserve(s.size());
  for (auto v : s) img.push_back(t(v));
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) sign = -sign;
  std::sort(img.begin(), img.end());
  return {std::move(img), sign};
}

}  // namespace

LefschetzNumber lefschetz_number(const SimplicialComplex& k, const VertexPermutation& t,
                                 SpectralOptions options) {
  const auto verts = k.vertices();
  if (t.size() != verts.size())
    throw std::invalid_argument("permutation domain differs from the vertex set");
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (t.mapping()[i].first != verts[i])
      throw std::invalid_argument("permutation domain differs from the vertex set");

  // Per dimension: target index and sign of every simplex image.
  const int top = k.top_dimension();
  std::vector<std::vector<std::pair<std::size_t, int>>> action(static_cast<std::size_t>(top + 1));
  LefschetzNumber out;
  for (int d = 0; d <= top; ++d) {
    const auto& table = k.simplices(d);
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto [img, sign] = image_of(table[i], t);
      const auto j = table.find(img);
      if (!j) throw std::invalid_argument("permutation is not a simplicial automorphism");
      action[static_cast<std::size_t>(d)].emplace_back(*j, sign);
      if (*j == i) out.brouwer_sum += (d % 2 == 0 ? 1 : -1) * sign;
    }
  }

  require_budget(k, options);
  const ChainComplex c(k);
  const auto d = coboundaries(c);
  double supertrace = 0.0;
  for (int dim = 0; dim <= top; ++dim) {
    const auto n = static_cast<Eigen::Index>(k.count(dim));
    const Eigen::MatrixXd below = dim >= 1 ? d[static_cast<std::size_t>(dim - 1)] : Eigen::MatrixXd();
    const Eigen::MatrixXd here = dim < top ? d[static_cast<std::size_t>(dim)] : Eigen::MatrixXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplace_block(below, here, n));
    const auto& ev = solver.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    // Pull back along T: (U g)(x) = sign * g(T x).
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < action[static_cast<std::size_t>(dim)].size(); ++i) {
      const auto [j, sign] = action[static_cast<std::size_t>(dim)][i];
      u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sign;
    }
    double trace = 0.0;
    for (Eigen::Index e = 0; e < n; ++e) {
      if (std::abs(ev[e]) > options.tolerance * scale) continue;
      const Eigen::VectorXd h = solver.eigenvectors().col(e);
      trace += h.dot(u * h);
    }
    supertrace += (dim % 2 == 0 ? 1.0 : -1.0) * trace;
  }
  out.supertrace = std::llround(supertrace);
  if (std::abs(supertrace - static_cast<double>(out.supertrace)) > 1e-6)
    throw ConsistencyError("harmonic supertrace is not an integer");
  return out;
}

}  // namespace arithmorse
