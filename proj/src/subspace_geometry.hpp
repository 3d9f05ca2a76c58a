#ifndef RADONFILT_SUBSPACE_GEOMETRY_HPP
#define RADONFILT_SUBSPACE_GEOMETRY_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finite_field.hpp"
#include "qcombinatorics.hpp"
#include "rational.hpp"

namespace radon {

inline constexpr std::size_t kDefaultMaxLevelPoints = 200000;

/// A subspace of F_q^n in its unique reduced-row-echelon canonical form.
/// Two Subspaces are equal iff their fields compare equal bitwise.
class Subspace {
 public:
  Subspace(int n, long q, int dim, std::vector<std::uint8_t> rows, std::vector<int> pivots)
      : n_(n), dim_(dim), q_(q), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  int ambient() const { return n_; }
  int dim() const { return dim_; }
  long q() const { return q_; }
  int entry(int row, int col) const { return rows_[static_cast<std::size_t>(row) * n_ + col]; }
  const std::vector<std::uint8_t>& raw_rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::string str() const;  // {"n":2,"q":2,"rows":[[1,0]]}

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.q_ == b.q_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {  // for map keys only
    return a.rows_ < b.rows_;
  }

 private:
  int n_, dim_;
  long q_;
  std::vector<std::uint8_t> rows_;  // dim x n, row-major
  std::vector<int> pivots_;
};

/// n x n matrix over F_q with nonzero determinant; the GL_n(q) group element.
struct InvertibleMatrix {
  std::vector<std::vector<int>> entries;
  InvertibleMatrix(const FiniteField& f, std::vector<std::vector<int>> e);
  static InvertibleMatrix identity(const FiniteField& f, int n);
};

class SubspaceLevelIndex;

/// The ambient space (F_q^n) and every subspace operation: canonicalization,
/// enumeration, distances, complements, GL action.
class SubspaceGeometry {
 public:
  SubspaceGeometry(int n, FiniteField field);

  int ambient() const { return n_; }
  long q() const { return field_.order(); }
  const FiniteField& field() const { return field_; }

  /// RREF of the row space; idempotent; zero input rows give the 0-subspace.
  Subspace canonicalize(const std::vector<std::vector<int>>& rows) const;

  Subspace zero() const;
  Subspace full() const;
  Subspace basepoint(int s) const;       // <e_1..e_s>
  Subspace dual_basepoint(int s) const;  // <e_{n-s+1}..e_n>

  int sum_dim(const Subspace& u, const Subspace& w) const;
  int intersection_dim(const Subspace& u, const Subspace& w) const;
  bool contains(const Subspace& inner, const Subspace& outer) const;
  int q_distance(const Subspace& w, const Subspace& w2) const;        // equal dims
  int q_pseudo_distance(const Subspace& u, const Subspace& w) const;  // dim U - dim(U∩W)

  bool is_complement(const Subspace& w2, const Subspace& w) const;  // w2 ⊕ w = V
  /// All q^{s(n-s)} complements of w, via graphs over the coordinate
  /// complement of w's pivot columns; deterministic order.
  std::vector<Subspace> enumerate_complements(const Subspace& w) const;
  /// Histogram of complements of w0 by distance to w0p.
  std::vector<std::pair<int, BigInt>> complements_by_distance(const Subspace& w0,
                                                              const Subspace& w0p) const;

  Subspace act(const InvertibleMatrix& g, const Subspace& w) const;
  InvertibleMatrix random_invertible(std::mt19937_64& rng) const;

 private:
  int n_;
  FiniteField field_;
};

/// Deterministic enumeration of one lattice level: points sorted by
/// (pivot-column pattern in colex order, then free entries read row-major as
/// base-q digits). Rank 0 is always <e_1..e_s>.
class SubspaceLevelIndex {
 public:
  SubspaceLevelIndex(const SubspaceGeometry& geom, int s,
                     std::size_t max_points = kDefaultMaxLevelPoints);

  int n() const { return n_; }
  int s() const { return s_; }
  long q() const { return q_; }
  std::size_t size() const { return points_.size(); }
  const Subspace& point(std::size_t rank) const { return points_[rank]; }
  std::size_t rank(const Subspace& w) const;
  const Subspace& basepoint() const { return points_[0]; }

 private:
  int n_, s_;
  long q_;
  std::vector<Subspace> points_;
  std::map<std::vector<std::uint8_t>, std::size_t> rank_of_;
};

}  // namespace radon

#endif
