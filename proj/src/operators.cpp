#include "operators.hpp"

#include <stdexcept>

#include "qcombinatorics.hpp"

namespace radon {

namespace {

// dense exact matrices are for desk scale; anything bigger must go through
// the sparse builder
constexpr std::size_t kMaxDenseEntries = 4'000'000;

void check_level_range(const Geometry& g, int m) {
  if (m < 0 || m > g.ambient()) throw std::invalid_argument("operator: level out of range");
}

void check_dense_size(std::size_t rows, std::size_t cols) {
  if (rows != 0 && rows * cols / rows != cols) throw std::invalid_argument("operator: size overflow");
  if (rows * cols > kMaxDenseEntries)
    throw std::invalid_argument("operator: dense matrix exceeds the size ceiling");
}

}  // namespace

RatMatrix build_radon(const Geometry& g, int s) {
  check_level_range(g, s);
  check_level_range(g, s + 1);
  const std::size_t lo = g.level_size(s), hi = g.level_size(s + 1);
  check_dense_size(hi, lo);
  RatMatrix m(hi, lo);
  for (std::size_t x = 0; x < hi; ++x)
    for (std::size_t z = 0; z < lo; ++z)
      if (g.contains(s, z, s + 1, x)) m.at(x, z) = 1;
  m.domain = g.level_ref(s);
  m.codomain = g.level_ref(s + 1);
  return m;
}

SparseTriplets build_radon_triplets(const Geometry& g, int s) {
  check_level_range(g, s);
  check_level_range(g, s + 1);
  SparseTriplets t;
  t.rows = g.level_size(s + 1);
  t.cols = g.level_size(s);
  for (std::size_t x = 0; x < t.rows; ++x)
    for (std::size_t z = 0; z < t.cols; ++z)
      if (g.contains(s, z, s + 1, x)) t.entries.emplace_back(x, z, Rat(1));
  return t;
}

RatMatrix build_adjoint(const RatMatrix& r) { return r.transposed(); }

RatMatrix build_averaging(const Geometry& g, int s, int k) {
  check_level_range(g, s);
  if (k < 0) throw std::invalid_argument("build_averaging: negative radius");
  const std::size_t sz = g.level_size(s);
  check_dense_size(sz, sz);
  RatMatrix m(sz, sz);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b)
      if (g.distance(s, a, b) == k) m.at(a, b) = 1;
  m.domain = g.level_ref(s);
  m.codomain = g.level_ref(s);
  return m;
}

RatMatrix build_complement_operator(const Geometry& g, int s) {
  const int n = g.ambient();
  check_level_range(g, s);
  const std::size_t rows = g.level_size(s), cols = g.level_size(n - s);
  check_dense_size(rows, cols);
  RatMatrix m(rows, cols);
  for (std::size_t x = 0; x < rows; ++x)
    for (std::size_t xp = 0; xp < cols; ++xp)
      if (g.is_complement(n - s, xp, s, x)) m.at(x, xp) = 1;
  m.domain = g.level_ref(n - s);
  m.codomain = g.level_ref(s);
  return m;
}

RatMatrix build_subset_complement_operator(int n, int s) {
  if (s < 0 || 2 * s > n) throw std::invalid_argument("complement operator: need s <= n/2");
  SubsetFamily g(n);
  return build_complement_operator(g, s);
}

RatMatrix build_q_complement_operator(int n, int s, long q, ComplementDirection dir) {
  if (s < 0 || 2 * s > n) throw std::invalid_argument("complement operator: need s <= n/2");
  SubspaceFamily g(n, q);
  RatMatrix c = build_complement_operator(g, s);
  // the complement relation is symmetric, so the dual-direction operator is
  // exactly the transpose
  return dir == ComplementDirection::to_primal ? c : c.transposed();
}

CompositionIdentityReport verify_composition_identity(const Geometry& g, int s) {
  const int n = g.ambient();
  CompositionIdentityReport rep;
  rep.coefficient = g.family() == Geometry::Family::subset ? BigInt(n - s) : q_int(n - s, g.q());
  RatMatrix r = build_radon(g, s);
  RatMatrix lhs = build_adjoint(r) * r;
  RatMatrix rhs = RatMatrix::identity(g.level_size(s)).scaled(Rat(rep.coefficient));
  rhs += build_averaging(g, s, 1);
  rep.holds = lhs == rhs;
  if (!rep.holds) {
    for (std::size_t i = 0; i < lhs.rows() && rep.witness.empty(); ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j)
        if (lhs.at(i, j) != rhs.at(i, j)) {
          rep.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                        lhs.at(i, j).str() + " vs " + rhs.at(i, j).str();
          break;
        }
  }
  return rep;
}

CommutationReport verify_commutation(int n, int s, long q) {
  if (s < 1 || 2 * s > n) throw std::invalid_argument("verify_commutation: need 1 <= s <= n/2");
  SubspaceFamily g(n, q);
  CommutationReport rep;
  rep.scalar_exponent = (n - s) - (s - 1);
  const Rat scalar = rat_pow(q, rep.scalar_exponent);
  const Rat scalar_sq = rat_pow(q, 2 * rep.scalar_exponent);

  RatMatrix c_s = build_complement_operator(g, s);          // V_{n-s} -> V_s
  RatMatrix c_s1 = build_complement_operator(g, s - 1);     // V_{n-s+1} -> V_{s-1}
  RatMatrix c_ns = c_s.transposed();                        // V_s -> V_{n-s}
  RatMatrix c_ns1 = c_s1.transposed();                      // V_{s-1} -> V_{n-s+1}
  RatMatrix r_s1 = build_radon(g, s - 1);                   // V_{s-1} -> V_s
  RatMatrix rstar_ns = build_adjoint(build_radon(g, n - s));  // V_{n-s+1} -> V_{n-s}

  rep.prop5c = (c_s * rstar_ns) == (r_s1 * c_s1).scaled(scalar);

  RatMatrix lhs4c = c_ns * r_s1;  // V_{s-1} -> V_{n-s}
  RatMatrix rhs4c = rstar_ns * c_ns1;
  rep.remark4c_stated = lhs4c == rhs4c.scaled(scalar);
  rep.remark4c_transposed = lhs4c.transposed() == rhs4c.transposed().scaled(scalar);

  RatMatrix sq1_lhs = (c_ns * c_s) * rstar_ns;    // V_{n-(s-1)} -> V_{n-s}
  RatMatrix sq1_rhs = rstar_ns * (c_ns1 * c_s1);
  rep.remark4e_first_printed = sq1_lhs == sq1_rhs;
  rep.remark4e_first_scaled = sq1_lhs == sq1_rhs.scaled(scalar_sq);

  RatMatrix sq2_lhs = r_s1 * (c_s1 * c_ns1);      // V_{s-1} -> V_s
  RatMatrix sq2_rhs = (c_s * c_ns) * r_s1;
  rep.remark4e_second_printed = sq2_lhs == sq2_rhs;
  rep.remark4e_second_scaled = sq2_lhs.scaled(scalar_sq) == sq2_rhs;

  return rep;
}

bool check_intertwining(const Geometry& g, const RatMatrix& t, int dom_level, int cod_level,
                        int samples, std::mt19937_64& rng) {
  if (t.rows() != g.level_size(cod_level) || t.cols() != g.level_size(dom_level))
    throw std::invalid_argument("check_intertwining: shape does not match levels");
  for (int it = 0; it < samples; ++it) {
    auto maps = g.sample_action(rng, {cod_level, dom_level});
    const auto& sc = maps[0];
    const auto& sd = maps[1];
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (t.at(sc[i], sd[j]) != t.at(i, j)) return false;
  }
  return true;
}

}  // namespace radon
