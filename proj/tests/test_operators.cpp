#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exact_linalg.hpp"
#include "geometry.hpp"
#include "operators.hpp"
#include "qcombinatorics.hpp"

using namespace radon;

TEST_CASE("radon matrices and row sums") {
  SubsetFamily g2(2);
  RatMatrix r0 = build_radon(g2, 0);
  CHECK(r0.rows() == 2);
  CHECK(r0.cols() == 1);
  CHECK(r0.at(0, 0) == Rat(1));
  CHECK(r0.at(1, 0) == Rat(1));
  CHECK(r0.codomain->level == 1);

  SubsetFamily g4(4);
  RatMatrix r1 = build_radon(g4, 1);
  for (std::size_t i = 0; i < r1.rows(); ++i) CHECK(r1.row_sum(i) == Rat(2));

  SubspaceFamily q2(2, 2);
  RatMatrix rq0 = build_radon(q2, 0);
  CHECK(rq0.rows() == 3);
  CHECK(rq0.cols() == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rq0.at(i, 0) == Rat(1));

  // row sums of R(q)_s are (s+1 over s)_q
  SubspaceFamily q42(4, 2);
  RatMatrix rq1 = build_radon(q42, 1);
  for (std::size_t i = 0; i < rq1.rows(); ++i)
    CHECK(rq1.row_sum(i) == Rat(gaussian_binomial(2, 1, 2)));
}

TEST_CASE("adjoint is the transpose and satisfies the pairing") {
  SubsetFamily g2(2);
  RatMatrix r0t = build_adjoint(build_radon(g2, 0));
  CHECK(r0t.rows() == 1);
  CHECK(r0t.cols() == 2);

  SubsetFamily g5(5);
  RatMatrix r = build_radon(g5, 2);
  RatMatrix rt = build_adjoint(r);
  CHECK(build_adjoint(rt) == r);

  // <R f, h> = <f, R* h> for random integer-valued f, h
  auto rng = seeded_rng("test/adjoint-pairing");
  for (int it = 0; it < 20; ++it) {
    std::vector<Rat> f(r.cols()), h(r.rows());
    for (auto& x : f) x = Rat(static_cast<long>(rng() % 21) - 10);
    for (auto& x : h) x = Rat(static_cast<long>(rng() % 21) - 10);
    CHECK(dot(r.apply(f), h) == dot(f, rt.apply(h)));
  }
}

TEST_CASE("averaging operators") {
  SubsetFamily g4(4);
  RatMatrix m0 = build_averaging(g4, 2, 0);
  CHECK(m0 == RatMatrix::identity(6));
  RatMatrix m1 = build_averaging(g4, 2, 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(m1.row_sum(i) == Rat(4));
  CHECK(m1 == m1.transposed());
  // empty sphere gives the zero matrix
  CHECK(build_averaging(g4, 0, 1).is_zero());

  SubspaceFamily q42(4, 2);
  RatMatrix mq1 = build_averaging(q42, 2, 1);
  for (std::size_t i = 0; i < mq1.rows(); ++i) CHECK(mq1.row_sum(i) == Rat(18));
}

TEST_CASE("composition identity") {
  SubsetFamily g4(4);
  auto rep = verify_composition_identity(g4, 1);
  CHECK(rep.holds);
  CHECK(rep.coefficient == 3);
  // s = 0 edge: R0* R0 = n Id on the one-point level
  auto rep0 = verify_composition_identity(g4, 0);
  CHECK(rep0.holds);
  CHECK(rep0.coefficient == 4);

  SubspaceFamily q32(3, 2);
  auto repq = verify_composition_identity(q32, 1);
  CHECK(repq.holds);
  CHECK(repq.coefficient == 3);  // (2)_q at q=2

  // grid: all families, all s < n at desk scale
  for (int n = 2; n <= 6; ++n) {
    SubsetFamily g(n);
    for (int s = 0; s < n; ++s) CHECK(verify_composition_identity(g, s).holds);
  }
  for (long q : {2L, 3L, 4L}) {
    SubspaceFamily g(3, q);
    for (int s = 0; s < 3; ++s) CHECK(verify_composition_identity(g, s).holds);
  }
}

TEST_CASE("subset complement operator") {
  RatMatrix c = build_subset_complement_operator(2, 1);
  // (C_1^* f)({1}) = f({2}): row of [1] has a one in the column of [2]
  CHECK(c.rows() == 2);
  CHECK(c.cols() == 2);
  CHECK(c.at(0, 1) == Rat(1));
  CHECK(c.at(0, 0) == Rat(0));
  CHECK(c.at(1, 0) == Rat(1));

  for (int n = 2; n <= 6; ++n)
    for (int s = 1; 2 * s <= n; ++s) {
      SubsetFamily g(n);
      RatMatrix cs = build_complement_operator(g, s);
      RatMatrix back = build_complement_operator(g, n - s);
      CHECK(cs * back == RatMatrix::identity(g.level_size(s)));
      CHECK(cs.transposed() * cs == RatMatrix::identity(cs.cols()));
    }
  CHECK_THROWS_AS(build_subset_complement_operator(4, 3), std::invalid_argument);
}

TEST_CASE("q complement operator") {
  RatMatrix c = build_q_complement_operator(2, 1, 2, ComplementDirection::to_primal);
  CHECK(c.rows() == 3);
  CHECK(c.cols() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(c.at(i, i) == Rat(0));
    CHECK(c.row_sum(i) == Rat(2));
  }
  RatMatrix cd = build_q_complement_operator(2, 1, 2, ComplementDirection::to_dual);
  CHECK(cd == c.transposed());

  RatMatrix c42 = build_q_complement_operator(4, 2, 2, ComplementDirection::to_primal);
  for (std::size_t i = 0; i < c42.rows(); ++i) CHECK(c42.row_sum(i) == Rat(16));
}

TEST_CASE("commutation identities") {
  {
    auto rep = verify_commutation(2, 1, 2);
    CHECK(rep.scalar_exponent == 1);
    CHECK(rep.prop5c);
    CHECK(rep.remark4c_stated);
    CHECK(rep.remark4e_first_scaled);
    CHECK(rep.remark4e_second_scaled);
    CHECK_FALSE(rep.remark4e_first_printed);
  }
  {
    auto rep = verify_commutation(4, 2, 2);
    CHECK(rep.scalar_exponent == 1);
    CHECK(rep.prop5c);
    CHECK(rep.remark4c_stated);
    CHECK(rep.remark4e_first_scaled);
    CHECK(rep.remark4e_second_scaled);
  }
  {
    auto rep = verify_commutation(3, 1, 3);
    CHECK(rep.scalar_exponent == 2);  // factor q^2 = 9
    CHECK(rep.prop5c);
    CHECK(rep.remark4c_stated);
  }
}

TEST_CASE("intertwining of built operators") {
  SubsetFamily g5(5);
  auto rng = seeded_rng("test/intertwine-subset");
  CHECK(check_intertwining(g5, build_radon(g5, 2), 2, 3, 25, rng));
  CHECK(check_intertwining(g5, build_averaging(g5, 2, 1), 2, 2, 25, rng));
  CHECK(check_intertwining(g5, build_complement_operator(g5, 2), 3, 2, 25, rng));

  SubspaceFamily q32(3, 2);
  auto rngq = seeded_rng("test/intertwine-subspace");
  CHECK(check_intertwining(q32, build_radon(q32, 1), 1, 2, 25, rngq));
  CHECK(check_intertwining(q32, build_complement_operator(q32, 1), 2, 1, 10, rngq));

  // a non-intertwiner is rejected
  RatMatrix bogus(g5.level_size(2), g5.level_size(2));
  bogus.at(0, 0) = 1;
  CHECK_FALSE(check_intertwining(g5, bogus, 2, 2, 25, rng));
}
