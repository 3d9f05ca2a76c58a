#include "subset_geometry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace radon {

Subset::Subset(int n, std::uint32_t bits) : bits_(bits), n_(n) {
  if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("Subset: ambient size out of range");
  if (n < 32 && (bits >> n) != 0) throw std::invalid_argument("Subset: members outside ground set");
  size_ = std::popcount(bits_);
}

Subset Subset::of(int n, const std::vector<int>& elements) {
  std::uint32_t b = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("Subset: element out of range");
    b |= (1u << (e - 1));
  }
  return Subset(n, b);
}

Subset Subset::range(int n, int s) {
  if (s < 0 || s > n) throw std::invalid_argument("Subset: bad range size");
  return Subset(n, s == 0 ? 0u : ((1u << s) - 1u));
}

bool Subset::contains(int element) const {
  return element >= 1 && element <= n_ && (bits_ >> (element - 1)) & 1u;
}

bool Subset::subset_of(const Subset& other) const {
  return n_ == other.n_ && (bits_ & ~other.bits_) == 0;
}

Subset Subset::complement() const {
  std::uint32_t all = (n_ == 0) ? 0u : ((n_ == 32) ? ~0u : ((1u << n_) - 1u));
  return Subset(n_, all & ~bits_);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size_);
  for (int e = 1; e <= n_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

std::string Subset::str() const {
  std::string s = "[";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "]";
}

int distance(const Subset& x, const Subset& x2) {
  if (x.ambient() != x2.ambient()) throw std::invalid_argument("distance: ambient mismatch");
  if (x.size() != x2.size()) throw std::invalid_argument("distance: size mismatch");
  return x.size() - std::popcount(x.bits() & x2.bits());
}

int pseudo_distance(const Subset& y, const Subset& x) {
  if (y.ambient() != x.ambient()) throw std::invalid_argument("pseudo_distance: ambient mismatch");
  return std::popcount(y.bits() & ~x.bits());
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  // Fisher-Yates with the shared engine; std::shuffle is implementation-defined
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(im[i], im[j]);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Subset Permutation::act(const Subset& x) const {
  if (x.ambient() != ambient()) throw std::invalid_argument("Permutation: ambient mismatch");
  std::uint32_t b = 0;
  for (int e : x.elements()) b |= (1u << ((*this)(e) - 1));
  return Subset(x.ambient(), b);
}

SubsetLevelIndex::SubsetLevelIndex(int n, int s) : n_(n), s_(s) {
  if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("enumerate_level: n out of range");
  if (s < 0 || s > n) throw std::invalid_argument("enumerate_level: need 0 <= s <= n");

  choose_.assign(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    choose_[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose_[i][j] = choose_[i - 1][j - 1] + (j <= i - 1 ? choose_[i - 1][j] : 0);
  }

  // Colex order: emit by increasing bitmask interpreted via the combinatorial
  // number system. Iterating all s-combinations in colex is the same as
  // iterating masks ordered by rank; generate recursively on the top element.
  points_.reserve(static_cast<std::size_t>(choose_[n][s]));
  std::vector<int> cur(s);
  // colex: smallest top element first, recursing on the remainder
  struct Gen {
    int s;
    std::vector<Subset>& out;
    int n;
    std::vector<int>& cur;
    void emit(int top, int k) {  // choose k elements below `top` (1-based exclusive)
      if (k == 0) {
        std::uint32_t b = 0;
        for (int i = 0; i < s; ++i) b |= (1u << (cur[i] - 1));
        out.push_back(Subset(n, b));
        return;
      }
      for (int e = k; e <= top; ++e) {  // e is the k-th (largest) element of the prefix
        cur[k - 1] = e;
        emit(e - 1, k - 1);
      }
    }
  };
  if (s == 0) {
    points_.push_back(Subset(n, 0));
  } else {
    Gen g{s, points_, n, cur};
    // largest element varies slowest in colex
    for (int e = s; e <= n; ++e) {
      cur[s - 1] = e;
      g.emit(e - 1, s - 1);
    }
  }

  // Basepoint {1..s} is colex-first by construction; the index contract pins
  // it at rank 0 regardless.
  const Subset bp = Subset::range(n, s);
  if (!(points_[0] == bp)) {
    auto it = std::find(points_.begin(), points_.end(), bp);
    std::iter_swap(points_.begin(), it);
  }
}

std::size_t SubsetLevelIndex::rank(const Subset& x) const {
  if (x.ambient() != n_ || x.size() != s_) throw std::invalid_argument("rank: wrong level");
  // combinatorial number system: colex rank = sum C(e_i - 1, i), i = 1..s
  std::uint64_t r = 0;
  int i = 1;
  for (int e : x.elements()) {
    r += choose_[e - 1][i];
    ++i;
  }
  return static_cast<std::size_t>(r);
}

std::vector<std::pair<int, BigInt>> orbit_sizes(int n, int s) {
  SubsetLevelIndex idx(n, s);
  const Subset& x0 = idx.basepoint();
  std::vector<BigInt> hist(std::min(s, n - s) + 1, BigInt(0));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    int d = distance(idx.point(r), x0);
    hist.at(d) += 1;
  }
  std::vector<std::pair<int, BigInt>> out;
  for (int i = 0; i < static_cast<int>(hist.size()); ++i) {
    if (hist[i] != binomial(s, s - i) * binomial(n - s, i))
      throw std::logic_error("orbit_sizes: enumeration disagrees with closed form");
    out.emplace_back(i, hist[i]);
  }
  return out;
}

}  // namespace radon
