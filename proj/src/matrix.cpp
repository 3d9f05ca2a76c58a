#include "matrix.hpp"

#include <stdexcept>

namespace radon {

std::string LevelRef::str() const {
  std::string s = family == Family::subset ? "subset" : "subspace";
  s += "/n=" + std::to_string(n);
  if (q > 0) s += "/q=" + std::to_string(q);
  s += "/level=" + std::to_string(level);
  return s;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  t.domain = codomain;
  t.codomain = domain;
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& b = rhs.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  out.domain = rhs.domain;
  out.codomain = codomain;
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in sum");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("RatMatrix: shape mismatch in difference");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != rhs.a_[i]) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Rat RatMatrix::row_sum(std::size_t i) const {
  Rat s;
  for (std::size_t j = 0; j < cols_; ++j) s += at(i, j);
  return s;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector length mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
    }
    out[i] = acc;
  }
  return out;
}

std::size_t RatMatrix::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& x : a_)
    if (!x.is_zero()) ++c;
  return c;
}

std::string RatMatrix::to_json() const {
  std::string s = "{\"rows\":" + std::to_string(rows_) + ",\"cols\":" + std::to_string(cols_) +
                  ",\"entries\":[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += "\"" + at(i, j).str() + "\"";
    }
    s += "]";
  }
  return s + "]}";
}

std::string RatMatrix::to_matrix_market() const {
  std::string s = "%%MatrixMarket matrix coordinate rational general\n";
  s += std::to_string(rows_) + " " + std::to_string(cols_) + " " + std::to_string(nonzero_count()) + "\n";
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (!x.is_zero())
        s += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + x.str() + "\n";
    }
  return s;
}

RatMatrix SparseTriplets::to_dense() const {
  RatMatrix m(rows, cols);
  for (const auto& [i, j, v] : entries) m.at(i, j) += v;
  return m;
}

}  // namespace radon
