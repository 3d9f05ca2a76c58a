#include "subspace_geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "subset_geometry.hpp"

namespace radon {

std::string Subspace::str() const {
  std::string s = "{\"n\":" + std::to_string(n_) + ",\"q\":" + std::to_string(q_) + ",\"rows\":[";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += std::to_string(static_cast<int>(rows_[static_cast<std::size_t>(i) * n_ + j]));
    }
    s += "]";
  }
  return s + "]}";
}

InvertibleMatrix::InvertibleMatrix(const FiniteField& f, std::vector<std::vector<int>> e)
    : entries(std::move(e)) {
  const int n = static_cast<int>(entries.size());
  // rank check by plain elimination over the field
  auto m = entries;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int pr = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    int piv_inv = f.inv(m[rank][c]);
    for (int j = 0; j < n; ++j) m[rank][j] = f.mul(m[rank][j], piv_inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      int factor = m[r][c];
      for (int j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  if (rank != n) throw std::invalid_argument("InvertibleMatrix: singular matrix");
}

InvertibleMatrix InvertibleMatrix::identity(const FiniteField& f, int n) {
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  return InvertibleMatrix(f, std::move(e));
}

SubspaceGeometry::SubspaceGeometry(int n, FiniteField field) : n_(n), field_(std::move(field)) {
  if (n < 0 || n > 16) throw std::invalid_argument("SubspaceGeometry: ambient dimension out of range");
}

Subspace SubspaceGeometry::canonicalize(const std::vector<std::vector<int>>& rows_in) const {
  const FiniteField& f = field_;
  std::vector<std::vector<int>> m;
  m.reserve(rows_in.size());
  for (const auto& r : rows_in) {
    if (static_cast<int>(r.size()) != n_)
      throw std::invalid_argument("canonicalize: row length != n");
    m.push_back(r);
    for (int& x : m.back()) {
      if (x < 0 || x >= f.order()) throw std::invalid_argument("canonicalize: entry not in F_q");
    }
  }
  int rank = 0;
  std::vector<int> pivots;
  for (int c = 0; c < n_ && rank < static_cast<int>(m.size()); ++c) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    int piv_inv = f.inv(m[rank][c]);
    for (int j = 0; j < n_; ++j) m[rank][j] = f.mul(m[rank][j], piv_inv);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      int factor = m[r][c];
      for (int j = 0; j < n_; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(rank) * n_);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < n_; ++j) flat[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(m[i][j]);
  return Subspace(n_, f.order(), rank, std::move(flat), std::move(pivots));
}

Subspace SubspaceGeometry::zero() const { return Subspace(n_, q(), 0, {}, {}); }

Subspace SubspaceGeometry::full() const { return basepoint(n_); }

Subspace SubspaceGeometry::basepoint(int s) const {
  if (s < 0 || s > n_) throw std::invalid_argument("basepoint: bad dimension");
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(s) * n_, 0);
  std::vector<int> pivots(s);
  for (int i = 0; i < s; ++i) {
    flat[static_cast<std::size_t>(i) * n_ + i] = 1;
    pivots[i] = i;
  }
  return Subspace(n_, q(), s, std::move(flat), std::move(pivots));
}

Subspace SubspaceGeometry::dual_basepoint(int s) const {
  if (s < 0 || s > n_) throw std::invalid_argument("dual_basepoint: bad dimension");
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(s) * n_, 0);
  std::vector<int> pivots(s);
  for (int i = 0; i < s; ++i) {
    flat[static_cast<std::size_t>(i) * n_ + (n_ - s + i)] = 1;
    pivots[i] = n_ - s + i;
  }
  return Subspace(n_, q(), s, std::move(flat), std::move(pivots));
}

int SubspaceGeometry::sum_dim(const Subspace& u, const Subspace& w) const {
  // rank of stacked bases, elimination only (no normalization needed)
  const FiniteField& f = field_;
  std::vector<std::vector<int>> m;
  m.reserve(u.dim() + w.dim());
  for (int i = 0; i < u.dim(); ++i) {
    std::vector<int> r(n_);
    for (int j = 0; j < n_; ++j) r[j] = u.entry(i, j);
    m.push_back(std::move(r));
  }
  for (int i = 0; i < w.dim(); ++i) {
    std::vector<int> r(n_);
    for (int j = 0; j < n_; ++j) r[j] = w.entry(i, j);
    m.push_back(std::move(r));
  }
  int rank = 0;
  for (int c = 0; c < n_ && rank < static_cast<int>(m.size()); ++c) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    int piv_inv = f.inv(m[rank][c]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      int factor = f.mul(m[r][c], piv_inv);
      for (int j = c; j < n_; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

int SubspaceGeometry::intersection_dim(const Subspace& u, const Subspace& w) const {
  if (u.ambient() != n_ || w.ambient() != n_ || u.q() != q() || w.q() != q())
    throw std::invalid_argument("intersection_dim: ambient mismatch");
  return u.dim() + w.dim() - sum_dim(u, w);
}

bool SubspaceGeometry::contains(const Subspace& inner, const Subspace& outer) const {
  return sum_dim(inner, outer) == outer.dim();
}

int SubspaceGeometry::q_distance(const Subspace& w, const Subspace& w2) const {
  if (w.dim() != w2.dim()) throw std::invalid_argument("q_distance: dimension mismatch");
  return w.dim() - intersection_dim(w, w2);
}

int SubspaceGeometry::q_pseudo_distance(const Subspace& u, const Subspace& w) const {
  return u.dim() - intersection_dim(u, w);
}

bool SubspaceGeometry::is_complement(const Subspace& w2, const Subspace& w) const {
  return w2.dim() + w.dim() == n_ && intersection_dim(w2, w) == 0;
}

std::vector<Subspace> SubspaceGeometry::enumerate_complements(const Subspace& w) const {
  const FiniteField& f = field_;
  const int s = w.dim();
  const int k = n_ - s;
  // coordinate complement of w's pivot columns
  std::vector<int> free_cols;
  {
    std::vector<bool> is_piv(n_, false);
    for (int c : w.pivots()) is_piv[c] = true;
    for (int c = 0; c < n_; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
  }
  // graphs {v + phi(v)} for phi: complement -> w, phi given by a k x s digit matrix
  std::vector<Subspace> out;
  std::vector<int> digitsv(static_cast<std::size_t>(k) * s, 0);
  const long q = f.order();
  while (true) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(n_, 0));
    for (int i = 0; i < k; ++i) {
      rows[i][free_cols[i]] = 1;
      for (int t = 0; t < s; ++t) {
        int c = digitsv[static_cast<std::size_t>(i) * s + t];
        if (c == 0) continue;
        for (int j = 0; j < n_; ++j)
          rows[i][j] = f.add(rows[i][j], f.mul(c, w.entry(t, j)));
      }
    }
    out.push_back(canonicalize(rows));
    // odometer, last digit fastest
    int pos = static_cast<int>(digitsv.size()) - 1;
    while (pos >= 0) {
      if (++digitsv[pos] < q) break;
      digitsv[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    if (digitsv.empty()) break;
  }
  return out;
}

std::vector<std::pair<int, BigInt>> SubspaceGeometry::complements_by_distance(
    const Subspace& w0, const Subspace& w0p) const {
  auto comps = enumerate_complements(w0);
  std::vector<BigInt> hist;
  for (const auto& wp : comps) {
    int j = q_distance(wp, w0p);
    if (j >= static_cast<int>(hist.size())) hist.resize(j + 1, BigInt(0));
    hist[j] += 1;
  }
  std::vector<std::pair<int, BigInt>> out;
  for (int j = 0; j < static_cast<int>(hist.size()); ++j) out.emplace_back(j, hist[j]);
  return out;
}

Subspace SubspaceGeometry::act(const InvertibleMatrix& g, const Subspace& w) const {
  std::vector<std::vector<int>> rows(w.dim(), std::vector<int>(n_, 0));
  for (int i = 0; i < w.dim(); ++i)
    for (int r = 0; r < n_; ++r) {
      int acc = 0;
      for (int j = 0; j < n_; ++j) acc = field_.add(acc, field_.mul(g.entries[r][j], w.entry(i, j)));
      rows[i][r] = acc;
    }
  return canonicalize(rows);
}

InvertibleMatrix SubspaceGeometry::random_invertible(std::mt19937_64& rng) const {
  const long q = field_.order();
  while (true) {
    std::vector<std::vector<int>> e(n_, std::vector<int>(n_));
    for (auto& row : e)
      for (int& x : row) x = static_cast<int>(rng() % static_cast<std::uint64_t>(q));
    try {
      return InvertibleMatrix(field_, std::move(e));
    } catch (const std::invalid_argument&) {
      // singular sample; retry
    }
  }
}

SubspaceLevelIndex::SubspaceLevelIndex(const SubspaceGeometry& geom, int s, std::size_t max_points)
    : n_(geom.ambient()), s_(s), q_(geom.q()) {
  if (s < 0 || s > n_) throw std::invalid_argument("enumerate_level: need 0 <= s <= n");
  BigInt expected = gaussian_binomial(n_, s, q_);
  if (expected > BigInt(static_cast<unsigned long>(max_points)))
    throw std::invalid_argument("enumerate_level: level size exceeds configured ceiling");

  // pivot patterns in colex order; free entries as base-q digits, row-major,
  // most significant digit first
  const long q = q_;
  SubsetLevelIndex patterns(n_, s);
  points_.reserve(static_cast<std::size_t>(expected.get_ui()));
  for (std::size_t pr = 0; pr < patterns.size(); ++pr) {
    std::vector<int> piv;
    for (int e : patterns.point(pr).elements()) piv.push_back(e - 1);
    std::sort(piv.begin(), piv.end());
    std::vector<bool> is_piv(n_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> free_pos;  // (row, col), row-major
    for (int i = 0; i < s; ++i)
      for (int j = piv[i] + 1; j < n_; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    std::vector<int> digitsv(free_pos.size(), 0);
    while (true) {
      std::vector<std::uint8_t> flat(static_cast<std::size_t>(s) * n_, 0);
      for (int i = 0; i < s; ++i) flat[static_cast<std::size_t>(i) * n_ + piv[i]] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        flat[static_cast<std::size_t>(free_pos[t].first) * n_ + free_pos[t].second] =
            static_cast<std::uint8_t>(digitsv[t]);
      points_.emplace_back(n_, q_, s, std::move(flat), piv);
      int pos = static_cast<int>(digitsv.size()) - 1;
      while (pos >= 0) {
        if (++digitsv[pos] < q) break;
        digitsv[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  if (BigInt(static_cast<unsigned long>(points_.size())) != expected)
    throw std::logic_error("enumerate_level: count disagrees with gaussian binomial");
  for (std::size_t r = 0; r < points_.size(); ++r) rank_of_[points_[r].raw_rows()] = r;
  if (rank_of_.size() != points_.size())
    throw std::logic_error("enumerate_level: duplicate canonical forms");
}

std::size_t SubspaceLevelIndex::rank(const Subspace& w) const {
  if (w.ambient() != n_ || w.dim() != s_ || w.q() != q_)
    throw std::invalid_argument("rank: wrong level");
  auto it = rank_of_.find(w.raw_rows());
  if (it == rank_of_.end()) throw std::invalid_argument("rank: point not in level");
  return it->second;
}

}  // namespace radon
