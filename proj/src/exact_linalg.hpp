#ifndef RADONFILT_EXACT_LINALG_HPP
#define RADONFILT_EXACT_LINALG_HPP

#include <span>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace radon {

/// Exact rank by fraction-free (Bareiss) elimination over integers after
/// clearing denominators row-wise. Pivot = first nonzero in column order.
int exact_rank(const RatMatrix& m);

/// Canonical kernel basis: the free-column vectors of the reduced row echelon
/// form, scaled to primitive integer vectors with positive leading entry.
/// Depends only on the row space, so the result is independent of row order.
std::vector<std::vector<Rat>> exact_kernel(const RatMatrix& m);

/// Exact solve of a square nonsingular system G x = b; throws
/// std::invalid_argument if G is singular.
std::vector<Rat> exact_solve(const RatMatrix& g, std::span<const Rat> b);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

}  // namespace radon

#endif
