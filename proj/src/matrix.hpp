#ifndef RADONFILT_MATRIX_HPP
#define RADONFILT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace radon {

/// Which enumerated level a matrix axis is indexed by.
struct LevelRef {
  enum class Family { subset, subspace };
  Family family;
  int n;
  long q;  // 0 for the subset family
  int level;

  friend bool operator==(const LevelRef&, const LevelRef&) = default;
  std::string str() const;
};

/// Dense matrix of exact rationals, optionally tagged with the level indices
/// of its domain (columns) and codomain (rows).
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::optional<LevelRef> domain;    // columns
  std::optional<LevelRef> codomain;  // rows

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;  // zero-skipping
  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  RatMatrix scaled(const Rat& c) const;
  bool operator==(const RatMatrix& rhs) const;

  bool is_zero() const;
  Rat row_sum(std::size_t i) const;
  std::vector<Rat> apply(std::span<const Rat> v) const;  // matrix * vector

  std::size_t nonzero_count() const;
  /// {"rows":r,"cols":c,"entries":[["p/q",...],...]}
  std::string to_json() const;
  /// MatrixMarket-style coordinate text, 1-based, "num/den" values.
  std::string to_matrix_market() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Sparse triplet form for the same incidence operators; used where a dense
/// materialization is not wanted.
struct SparseTriplets {
  std::size_t rows = 0, cols = 0;
  std::vector<std::tuple<std::size_t, std::size_t, Rat>> entries;  // row-major sorted
  RatMatrix to_dense() const;
};

}  // namespace radon

#endif
