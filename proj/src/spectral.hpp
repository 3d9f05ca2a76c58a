#ifndef RADONFILT_SPECTRAL_HPP
#define RADONFILT_SPECTRAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "matrix.hpp"

namespace radon {

struct Component {
  int t = 0;
  std::vector<std::vector<Rat>> basis;  // vectors of length |level|
};

struct Decomposition {
  int level = 0;  // the level the components live on
  bool dual = false;
  std::vector<Component> components;  // t = 0..s
};

/// The recursive filtration of level s (requires s <= n/2): component t is
/// the kernel of the adjoint Radon map at level t pushed up the Radon chain,
/// component 0 the constants. Verifies exactly, and throws std::logic_error
/// if violated:
///   - dim H^t = |level t| - |level t-1|  (a non-injective chain map at
///     t < s would break this),
///   - pairwise orthogonality under the counting inner product,
///   - dimensions summing to the level size.
Decomposition decompose_level(const Geometry& g, int s);

/// Mirror filtration of level n-s built from kernels of the downward Radon
/// maps pushed down the adjoint chain. Same exactness guarantees.
Decomposition decompose_dual_level(const Geometry& g, int s);

/// The unique scalar by which m acts on the span of basis; throws
/// std::logic_error if the space is not an eigenspace (that would falsify
/// multiplicity-freeness).
Rat eigenvalue_on_component(const RatMatrix& m, const std::vector<std::vector<Rat>>& basis);

/// Orthogonally projects the basepoint delta onto the component (exact Gram
/// solve), rescales to 1 at the basepoint, asserts the result is constant on
/// every distance sphere, and returns the per-distance values.
std::vector<Rat> spherical_from_projector(const Geometry& g, int level,
                                          const std::vector<std::vector<Rat>>& basis);

/// Full column rank, i.e. the operator is injective.
bool certify_injective(const RatMatrix& m);

// ---- reporting ----

struct ComponentReport {
  int t = 0;
  std::size_t dimension = 0;
  Rat m1_eigenvalue;
  std::vector<Rat> spherical;  // indexed by distance j
};

struct DecompositionReport {
  LevelRef::Family family = LevelRef::Family::subset;
  int n = 0;
  long q = 0;
  int s = 0;      // filtration parameter (<= n/2)
  int level = 0;  // s, or n-s for the dual route
  bool dual = false;
  std::vector<ComponentReport> components;
  std::vector<std::pair<std::string, bool>> injectivity;  // operator label -> verdict

  std::string to_json() const;
  std::string to_csv() const;
};

/// Builds the full report for the level holding `s`-element points; levels
/// above n/2 are routed through the dual filtration.
DecompositionReport decomposition_report(const Geometry& g, int s);

}  // namespace radon

#endif
