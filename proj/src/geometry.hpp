#ifndef RADONFILT_GEOMETRY_HPP
#define RADONFILT_GEOMETRY_HPP

#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "subset_geometry.hpp"
#include "subspace_geometry.hpp"

namespace radon {

/// Uniform surface over the two lattice families. Points are addressed as
/// (level, rank) against the deterministic level enumerations; operators and
/// the spectral machinery only ever see ranks.
class Geometry {
 public:
  using Family = LevelRef::Family;

  virtual ~Geometry() = default;

  virtual Family family() const = 0;
  virtual int ambient() const = 0;
  virtual long q() const = 0;  // 0 for the subset family
  virtual BigInt expected_level_size(int m) const = 0;
  virtual std::size_t level_size(int m) const = 0;

  /// Is point a (level t) contained in point b (level s)?
  virtual bool contains(int t, std::size_t a, int s, std::size_t b) const = 0;
  virtual int distance(int m, std::size_t a, std::size_t b) const = 0;
  virtual int pseudo_distance(int t, std::size_t a, int s, std::size_t b) const = 0;
  /// Does point a (level t) together with point b (level s) make up the whole
  /// ground object? (t + s = n required; set union / direct sum.)
  virtual bool is_complement(int t, std::size_t a, int s, std::size_t b) const = 0;
  virtual std::string point_repr(int m, std::size_t rank) const = 0;

  /// Samples one group element and returns its forward point map on each of
  /// the requested levels: out[k][r] = rank of g·(point r) in level levels[k].
  virtual std::vector<std::vector<std::size_t>> sample_action(
      std::mt19937_64& rng, const std::vector<int>& levels) const = 0;

  LevelRef level_ref(int m) const { return LevelRef{family(), ambient(), q(), m}; }
};

class SubsetFamily final : public Geometry {
 public:
  explicit SubsetFamily(int n);

  Family family() const override { return Family::subset; }
  int ambient() const override { return n_; }
  long q() const override { return 0; }
  BigInt expected_level_size(int m) const override;
  std::size_t level_size(int m) const override { return level(m).size(); }
  bool contains(int t, std::size_t a, int s, std::size_t b) const override;
  int distance(int m, std::size_t a, std::size_t b) const override;
  int pseudo_distance(int t, std::size_t a, int s, std::size_t b) const override;
  bool is_complement(int t, std::size_t a, int s, std::size_t b) const override;
  std::string point_repr(int m, std::size_t rank) const override;
  std::vector<std::vector<std::size_t>> sample_action(
      std::mt19937_64& rng, const std::vector<int>& levels) const override;

  const SubsetLevelIndex& level(int m) const;

 private:
  int n_;
  mutable std::vector<std::once_flag> once_;
  mutable std::vector<std::unique_ptr<SubsetLevelIndex>> cache_;
};

class SubspaceFamily final : public Geometry {
 public:
  SubspaceFamily(int n, long q, std::size_t max_level_points = kDefaultMaxLevelPoints);
  SubspaceFamily(int n, FiniteField field, std::size_t max_level_points = kDefaultMaxLevelPoints);

  Family family() const override { return Family::subspace; }
  int ambient() const override { return n_; }
  long q() const override { return space_.q(); }
  BigInt expected_level_size(int m) const override;
  std::size_t level_size(int m) const override { return level(m).size(); }
  bool contains(int t, std::size_t a, int s, std::size_t b) const override;
  int distance(int m, std::size_t a, std::size_t b) const override;
  int pseudo_distance(int t, std::size_t a, int s, std::size_t b) const override;
  bool is_complement(int t, std::size_t a, int s, std::size_t b) const override;
  std::string point_repr(int m, std::size_t rank) const override;
  std::vector<std::vector<std::size_t>> sample_action(
      std::mt19937_64& rng, const std::vector<int>& levels) const override;

  const SubspaceLevelIndex& level(int m) const;
  const SubspaceGeometry& space() const { return space_; }

 private:
  int n_;
  SubspaceGeometry space_;
  std::size_t max_level_points_;
  mutable std::vector<std::once_flag> once_;
  mutable std::vector<std::unique_ptr<SubspaceLevelIndex>> cache_;
};

std::unique_ptr<Geometry> make_geometry(LevelRef::Family family, int n, long q = 0,
                                        std::size_t max_level_points = kDefaultMaxLevelPoints);

/// Deterministic engine seeded from a tag (FNV-1a); identical tags give
/// identical streams on every platform and run.
std::mt19937_64 seeded_rng(const std::string& tag);

}  // namespace radon

#endif
