#ifndef RADONFILT_OPERATORS_HPP
#define RADONFILT_OPERATORS_HPP

#include <random>
#include <string>

#include "geometry.hpp"
#include "matrix.hpp"

namespace radon {

/// The generalized Radon transform: level s -> level s+1, entry(X, Z) = 1 iff
/// Z is a codimension-one sub-object of X.
RatMatrix build_radon(const Geometry& g, int s);
SparseTriplets build_radon_triplets(const Geometry& g, int s);

/// The adjoint (transpose under the counting inner product).
RatMatrix build_adjoint(const RatMatrix& r);

/// Sphere-of-radius-k averaging operator on one level. An empty sphere
/// (k beyond the level's diameter) gives the zero matrix.
RatMatrix build_averaging(const Geometry& g, int s, int k);

/// Complement operator of the level pair (n-s, s): entry(X row, X' col) = 1
/// iff X' is a complement of X. For subsets this is the permutation matrix of
/// X -> N-X; for subspaces the row sums are q^{s(n-s)}.
RatMatrix build_complement_operator(const Geometry& g, int s);

RatMatrix build_subset_complement_operator(int n, int s);

enum class ComplementDirection {
  to_primal,  // L2(V_{n-s}) -> L2(V_s)
  to_dual,    // L2(V_s) -> L2(V_{n-s})
};
RatMatrix build_q_complement_operator(int n, int s, long q, ComplementDirection dir);

struct CompositionIdentityReport {
  bool holds = false;
  BigInt coefficient;   // n-s resp. (n-s)_q
  std::string witness;  // first mismatching coordinate when it fails
};

/// Checks R_s* ∘ R_s = c·Id + M_1 with c = n-s (subset) resp. (n-s)_q
/// (subspace), by computing both sides exactly.
CompositionIdentityReport verify_composition_identity(const Geometry& g, int s);

struct CommutationReport {
  long scalar_exponent = 0;  // (n-s)-(s-1)
  bool prop5c = false;               // C_s* . R*_{n-s} = q^exp . R_{s-1} . C_{s-1}*
  bool remark4c_stated = false;      // C_{n-s}* . R_{s-1} = q^exp . R*_{n-s} . C_{n-(s-1)}*
  bool remark4c_transposed = false;  // the transposed orientation, recorded for the ledger
  bool remark4e_first_scaled = false;   // with the derived scalar q^{2·exponent}
  bool remark4e_second_scaled = false;
  bool remark4e_first_printed = false;  // scalar-free form as printed
  bool remark4e_second_printed = false;
};

/// All complement/Radon commutation identities on the (s-1, s, n-s, n-s+1)
/// level square.
CommutationReport verify_commutation(int n, int s, long q);

/// T maps level dom -> level cod. Samples group elements and checks
/// T(g·x, g·y) = T(x, y) entrywise, i.e. T commutes with the action.
bool check_intertwining(const Geometry& g, const RatMatrix& t, int dom_level, int cod_level,
                        int samples, std::mt19937_64& rng);

}  // namespace radon

#endif
