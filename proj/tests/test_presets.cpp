#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/presets.hpp"

using namespace smashhc;
using namespace smashhc::presets;

TEST_CASE("pareigis_surrogate(1): relations t^2 = 1, s^2 = 0, st = -ts") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  const AlgebraPtr& s = p1.algebra();
  CHECK(s->dim() == 4);
  // basis: 1#1 (0), 1#t (1), s#1 (2), s#t (3)
  CHECK(sparse_equal(s->mult(1, 1), sparse_unit(0)));   // t^2 = 1
  CHECK(s->mult(2, 2).empty());                          // s^2 = 0
  CHECK(sparse_equal(s->mult(2, 1), sparse_unit(3)));    // s t = s#t
  CHECK(sparse_equal(s->mult(1, 2), sparse_unit(3, Scalar(-1))));  // t s = -s#t
}

TEST_CASE("pareigis_surrogate(1) is algebra-isomorphic to Sweedler H4") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  HopfAlgebra h4 = sweedler();
  // phi(s^e # t^r) = (-1)^{e r} g^r d^e; check structure constants transport
  auto phi = [](Index flat) {
    Index e = flat / 2, r = flat % 2;
    return std::pair<Index, Scalar>{r * 2 + e,
                                    Scalar((e * r) % 2 == 0 ? 1 : -1)};
  };
  for (Index u = 0; u < 4; ++u)
    for (Index v = 0; v < 4; ++v) {
      auto [pu, cu] = phi(u);
      auto [pv, cv] = phi(v);
      // phi(u v)
      SparseVec lhs;
      for (const auto& e : p1.algebra()->mult(u, v)) {
        auto [pw, cw] = phi(e.row);
        sparse_axpy(lhs, e.val * cw, sparse_unit(pw));
      }
      // phi(u) phi(v)
      SparseVec rhs;
      sparse_axpy(rhs, cu * cv, h4.alg()->mult(pu, pv));
      CHECK(sparse_equal(lhs, rhs));
    }
}

TEST_CASE("module_algebra_5_2(2) action: d.x = 1, g.x = -x") {
  TensorMap act = module_algebra_5_2_action(2);
  // action columns: (h * 2 + a); taft(2) basis 1, d, g, gd
  CHECK(sparse_equal(act.mat.col(1 * 2 + 1), sparse_unit(0)));            // d.x = 1
  CHECK(sparse_equal(act.mat.col(2 * 2 + 1), sparse_unit(1, Scalar(-1)))); // g.x = -x
  CHECK(act.mat.col(1 * 2 + 0).empty());                                   // d.1 = 0
  CHECK(sparse_equal(act.mat.col(2 * 2 + 0), sparse_unit(0)));             // g.1 = 1
}

TEST_CASE("module_algebra_5_2(3) uses exact cyclotomic scalars") {
  SmashAlgebra sm = module_algebra_5_2(3);
  CHECK(sm.algebra()->dim() == 27);
  CHECK(sm.rmap().check().all_pass());
  // (2)_q with q = zeta_3 is 1 + q
  TensorMap act = module_algebra_5_2_action(3);
  Scalar expect = Scalar(1) + Scalar::zeta(3);
  // d.x^2 = (2)_q x
  SparseVec col = act.mat.col(1 * 3 + 2);
  REQUIRE(col.size() == 1);
  CHECK(col[0].row == 1);
  CHECK(col[0].val == expect);
}

TEST_CASE("tensor_flip(K2,K2) is the commutative 4-dim product") {
  SmashAlgebra sm = tensor_flip(cyclic_group_algebra(2), cyclic_group_algebra(2));
  const AlgebraPtr& a = sm.algebra();
  CHECK(a->dim() == 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      CHECK(sparse_equal(a->mult(i, j), a->mult(j, i)));
}

TEST_CASE("dual numbers resolution oracle: H(D) = (2,1,1,1,...)") {
  // D as a bimodule over itself: left and right multiplication by s
  SparseMatrix ls(2, 2), rs(2, 2);
  ls.set_col(0, sparse_unit(1));
  rs.set_col(0, sparse_unit(1));
  HomologyTable t = dual_numbers_resolution_homology(ls, rs, 5);
  REQUIRE(t.dims.size() == 6);
  CHECK(t.dims[0] == 2);
  for (std::size_t q = 1; q <= 5; ++q) CHECK(t.dims[q] == 1);
  for (bool f : t.flagged) CHECK_FALSE(f);
}

TEST_CASE("dual numbers resolution oracle: trivial action") {
  SparseMatrix z(3, 3);
  HomologyTable t = dual_numbers_resolution_homology(z, z, 4);
  for (std::size_t q = 0; q <= 4; ++q) CHECK(t.dims[q] == 3);
}

TEST_CASE("resolution oracle rejects non-D bimodules") {
  SparseMatrix bad(2, 2);
  bad.set_col(0, sparse_unit(1));
  bad.set_col(1, sparse_unit(0));  // squares to identity, not zero
  CHECK_THROWS_AS(dual_numbers_resolution_homology(bad, bad, 2), WrongAlgebra);
}

TEST_CASE("preset catalog: parsing, validation, unknown names") {
  CHECK(get_preset("dual_numbers").plain->dim() == 2);
  CHECK(get_preset("cyclic_group(3)").plain->dim() == 3);
  CHECK(get_preset("sweedler").hopf->dim() == 4);
  CHECK(get_preset("taft(3)").hopf->dim() == 9);
  CHECK(get_preset("module_algebra_5_2(2)").smash->algebra()->dim() == 8);
  CHECK(get_preset("module_algebra_5_2(2)").a_separable);
  CHECK(get_preset("pareigis_surrogate(1)").b_separable);
  CHECK(get_preset("tensor_flip(K2,K2)").smash->algebra()->dim() == 4);
  CHECK(get_preset("bismash").smash->algebra()->dim() == 4);
  CHECK(get_preset("drinfeld_double_sweedler").smash->algebra()->dim() == 16);
  CHECK_THROWS_AS(get_preset("nope"), UnknownPreset);
  CHECK_THROWS_AS(get_preset("taft"), UnknownPreset);
  CHECK_THROWS_AS(get_preset("taft(999)"), UnsupportedField);
  CHECK_THROWS_AS(get_preset("tensor_flip(Z9,K2)"), UnknownPreset);
  CHECK(preset_names().size() == 9);
}
