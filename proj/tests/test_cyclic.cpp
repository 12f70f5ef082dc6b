#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/cyclic.hpp"
#include "smashhc/presets.hpp"

using namespace smashhc;
using namespace smashhc::presets;

TEST_CASE("algebra cyclic module of K2: direct formulas at small levels") {
  auto k2 = cyclic_group_algebra(2);
  ParacyclicModule m = algebra_cyclic_module(k2, 3);
  // d_0(x_0, x_1) = x_0 x_1: column (x, x) -> 1
  CHECK(sparse_equal(m.face(1, 0).col(3), sparse_unit(0)));
  // s_0 at n = 0 inserts the unit after x_0: x -> (x, 1)
  CHECK(sparse_equal(m.degen(0, 0).col(1), sparse_unit(2)));
  // t at n = 1 is the flip and squares to the identity
  CHECK(sparse_equal(m.t(1).col(1), sparse_unit(2)));
  CHECK((m.t(1) * m.t(1)).is_identity());
  // extra degeneracy inserts the unit at the front
  CHECK(sparse_equal(m.extra_degen(0).col(1), sparse_unit(1)));
}

TEST_CASE("K2 cyclic module passes axioms, generation, Lemma 2.2") {
  ParacyclicModule m = algebra_cyclic_module(cyclic_group_algebra(2), 4);
  CHECK(m.check_axioms(/*cyclic_mode=*/true).all_pass());
  CHECK(m.check_generation_consistency().all_pass());
  CHECK(m.check_lemma22().all_pass());
  CHECK(m.is_cyclic());
}

TEST_CASE("generator-style construction reproduces the direct operators") {
  auto d = dual_numbers();
  ParacyclicModule direct = algebra_cyclic_module(d, 3);
  auto space_of = [&](std::size_t n) {
    return std::optional<TensorSpace>(TensorSpace::power(d, n + 1));
  };
  auto dim_of = [&](std::size_t n) {
    return TensorSpace::power(d, n + 1).dim32();
  };
  auto last_face = [&](std::size_t n) {
    TensorSpace sp = TensorSpace::power(d, n + 1);
    std::vector<std::size_t> perm(n + 1);
    perm[0] = n;
    for (std::size_t k = 1; k <= n; ++k) perm[k] = k - 1;
    return face_multiply(sp, 0).mat * permute_factors(sp, perm).mat;
  };
  auto extra = [&](std::size_t n) {
    return insert_unit(TensorSpace::power(d, n + 1), 0, d).mat;
  };
  ParacyclicModule gen = ParacyclicModule::from_generators(
      "gen C(D)", 3, space_of, dim_of, last_face, extra);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(gen.t(n) == direct.t(n));
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i)
        CHECK(gen.face(n, i) == direct.face(n, i));
    if (n + 1 <= 3)
      for (std::size_t i = 0; i <= n; ++i)
        CHECK(gen.degen(n, i) == direct.degen(n, i));
  }
  CHECK(gen.check_axioms(true).all_pass());
}

TEST_CASE("b vanishes on C_1 of a commutative algebra; T = id when cyclic") {
  ParacyclicModule m = algebra_cyclic_module(cyclic_group_algebra(2), 3);
  CHECK(m.b_matrix(1).is_zero());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(m.big_t(n).is_identity());
}

TEST_CASE("C of the P1 smash algebra: cyclic axioms and mixed complex") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  ParacyclicModule m = algebra_cyclic_module(p1.algebra(), 3);
  CHECK(m.check_axioms(true).all_pass());
  CHECK(m.check_generation_consistency().all_pass());
  CHECK(m.check_lemma22().all_pass());
  MixedComplex mc = m.mixed_complex();
  CHECK(mc.check().all_pass());
  // B^2 = 0 spot checks at n = 0, 1
  CHECK((mc.big[1] * mc.big[0]).is_zero());
}

TEST_CASE("C of the 5.2 smash: mixed-complex identities to level 3") {
  SmashAlgebra sm = module_algebra_5_2(2);
  ParacyclicModule m = algebra_cyclic_module(sm.algebra(), 3);
  CHECK(m.check_axioms(true).all_pass());
  MixedComplex mc = m.mixed_complex();
  CHECK(mc.check().all_pass());
}

TEST_CASE("a paracyclic-only module: axioms hold, cyclicity fails honestly") {
  // rescale t of C(K2) at every level by 2: (3) and (5) survive conjugation
  // scaling only if the faces/degens are rebuilt accordingly, so instead use
  // a 1-dimensional module with t = 2.
  std::vector<PLevel> levels(2);
  for (std::size_t n = 0; n <= 1; ++n) {
    PLevel& lv = levels[n];
    lv.dim = 1;
    SparseMatrix t(1, 1);
    t.set(0, 0, Scalar(2));
    lv.t = t;
    if (n == 1) lv.face = {SparseMatrix::identity(1),
                           SparseMatrix::identity(1).scaled(Scalar(2))};
    lv.degen.assign(n + 1, SparseMatrix::identity(1));
    if (n == 1) lv.degen = {SparseMatrix::identity(1),
                            SparseMatrix::identity(1)};
  }
  // d_0 t = d_1: 1*2 = 2; s_0 t = t^2 s_0 fails (2 != 4), so only check (4)
  ParacyclicModule m = ParacyclicModule::from_direct("toy", std::move(levels));
  CHECK_FALSE(m.is_cyclic());
  CHECK_THROWS_AS(m.ensure_cyclic(), NotCyclic);
  CHECK_THROWS_AS(m.mixed_complex(), NotCyclic);
}
