#ifndef RADONFILT_SUBSET_GEOMETRY_HPP
#define RADONFILT_SUBSET_GEOMETRY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcombinatorics.hpp"
#include "rational.hpp"

namespace radon {

// Hard ceiling for the ground-set size; C(20,10) ~ 184k points is the
// practical limit for dense exact matrices.
inline constexpr int kMaxGroundSet = 20;

/// An s-element subset of {1..n}, stored as a bitmask. Elements are 1-based
/// to match the usual labeling of the ground set.
class Subset {
 public:
  Subset(int n, std::uint32_t bits);
  static Subset of(int n, const std::vector<int>& elements);
  static Subset empty(int n) { return Subset(n, 0); }
  static Subset range(int n, int s);  // {1..s}

  int ambient() const { return n_; }
  int size() const { return size_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(int element) const;
  bool subset_of(const Subset& other) const;
  Subset complement() const;
  std::vector<int> elements() const;  // sorted, 1-based
  std::string str() const;            // "[1,3,4]"

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::uint32_t bits_;
  int n_;
  int size_;  // cached popcount
};

/// d(X, X') = |X| - |X ∩ X'|; requires equal sizes and ambient.
int distance(const Subset& x, const Subset& x2);

/// ℓ(Y, X) = |Y - X|; asymmetric, any sizes, same ambient.
int pseudo_distance(const Subset& y, const Subset& x);

/// A bijection of {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);
  static Permutation random(int n, std::mt19937_64& rng);

  int ambient() const { return static_cast<int>(images_.size()); }
  int operator()(int element) const { return images_[element - 1]; }
  Permutation inverse() const;
  Subset act(const Subset& x) const;

 private:
  std::vector<int> images_;
};

/// Deterministic (colexicographic) enumeration of one lattice level, with the
/// basepoint {1..s} at rank 0 and O(s) rank lookup via the combinatorial
/// number system.
class SubsetLevelIndex {
 public:
  SubsetLevelIndex(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  std::size_t size() const { return points_.size(); }
  const Subset& point(std::size_t rank) const { return points_[rank]; }
  std::size_t rank(const Subset& x) const;
  const Subset& basepoint() const { return points_[0]; }

 private:
  int n_, s_;
  std::vector<Subset> points_;
  std::vector<std::vector<std::uint64_t>> choose_;  // small Pascal table for ranking
};

/// Exhaustive orbit histogram of the level (n, s) by distance from the
/// basepoint. Cross-checked internally against C(s, s-i)·C(n-s, i); throws
/// if the enumeration ever disagrees with the closed form.
std::vector<std::pair<int, BigInt>> orbit_sizes(int n, int s);

}  // namespace radon

#endif
