#include "geometry.hpp"

#include <stdexcept>

namespace radon {

SubsetFamily::SubsetFamily(int n) : n_(n), once_(n + 1), cache_(n + 1) {
  if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("SubsetFamily: n out of range");
}

const SubsetLevelIndex& SubsetFamily::level(int m) const {
  if (m < 0 || m > n_) throw std::invalid_argument("level: out of range");
  std::call_once(once_[m], [&] { cache_[m] = std::make_unique<SubsetLevelIndex>(n_, m); });
  return *cache_[m];
}

BigInt SubsetFamily::expected_level_size(int m) const {
  if (m < 0 || m > n_) return 0;
  return binomial(n_, m);
}

bool SubsetFamily::contains(int t, std::size_t a, int s, std::size_t b) const {
  return level(t).point(a).subset_of(level(s).point(b));
}

int SubsetFamily::distance(int m, std::size_t a, std::size_t b) const {
  return radon::distance(level(m).point(a), level(m).point(b));
}

int SubsetFamily::pseudo_distance(int t, std::size_t a, int s, std::size_t b) const {
  return radon::pseudo_distance(level(t).point(a), level(s).point(b));
}

bool SubsetFamily::is_complement(int t, std::size_t a, int s, std::size_t b) const {
  if (t + s != n_) return false;
  const Subset& x = level(t).point(a);
  const Subset& y = level(s).point(b);
  return (x.bits() & y.bits()) == 0;  // disjoint with |x|+|y| = n means union is N
}

std::string SubsetFamily::point_repr(int m, std::size_t rank) const {
  return level(m).point(rank).str();
}

std::vector<std::vector<std::size_t>> SubsetFamily::sample_action(
    std::mt19937_64& rng, const std::vector<int>& levels) const {
  Permutation g = Permutation::random(n_, rng);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(levels.size());
  for (int m : levels) {
    const SubsetLevelIndex& idx = level(m);
    std::vector<std::size_t> map(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) map[r] = idx.rank(g.act(idx.point(r)));
    out.push_back(std::move(map));
  }
  return out;
}

SubspaceFamily::SubspaceFamily(int n, long q, std::size_t max_level_points)
    : SubspaceFamily(n, FiniteField(QParameter(q)), max_level_points) {}

SubspaceFamily::SubspaceFamily(int n, FiniteField field, std::size_t max_level_points)
    : n_(n), space_(n, std::move(field)), max_level_points_(max_level_points), once_(n + 1),
      cache_(n + 1) {}

const SubspaceLevelIndex& SubspaceFamily::level(int m) const {
  if (m < 0 || m > n_) throw std::invalid_argument("level: out of range");
  std::call_once(once_[m],
                 [&] { cache_[m] = std::make_unique<SubspaceLevelIndex>(space_, m, max_level_points_); });
  return *cache_[m];
}

BigInt SubspaceFamily::expected_level_size(int m) const {
  if (m < 0 || m > n_) return 0;
  return gaussian_binomial(n_, m, space_.q());
}

bool SubspaceFamily::contains(int t, std::size_t a, int s, std::size_t b) const {
  return space_.contains(level(t).point(a), level(s).point(b));
}

int SubspaceFamily::distance(int m, std::size_t a, std::size_t b) const {
  return space_.q_distance(level(m).point(a), level(m).point(b));
}

int SubspaceFamily::pseudo_distance(int t, std::size_t a, int s, std::size_t b) const {
  return space_.q_pseudo_distance(level(t).point(a), level(s).point(b));
}

bool SubspaceFamily::is_complement(int t, std::size_t a, int s, std::size_t b) const {
  if (t + s != n_) return false;
  return space_.is_complement(level(t).point(a), level(s).point(b));
}

std::string SubspaceFamily::point_repr(int m, std::size_t rank) const {
  return level(m).point(rank).str();
}

std::vector<std::vector<std::size_t>> SubspaceFamily::sample_action(
    std::mt19937_64& rng, const std::vector<int>& levels) const {
  InvertibleMatrix g = space_.random_invertible(rng);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(levels.size());
  for (int m : levels) {
    const SubspaceLevelIndex& idx = level(m);
    std::vector<std::size_t> map(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) map[r] = idx.rank(space_.act(g, idx.point(r)));
    out.push_back(std::move(map));
  }
  return out;
}

std::unique_ptr<Geometry> make_geometry(LevelRef::Family family, int n, long q,
                                        std::size_t max_level_points) {
  if (family == LevelRef::Family::subset) return std::make_unique<SubsetFamily>(n);
  return std::make_unique<SubspaceFamily>(n, q, max_level_points);
}

std::mt19937_64 seeded_rng(const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return std::mt19937_64(h);
}

}  // namespace radon
