#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/presets.hpp"
#include "smashhc/smash.hpp"

using namespace smashhc;
using namespace smashhc::presets;

namespace {

// index helpers for the pareigis surrogate P1 = D # T2
// D basis: 1, s (0, 1); T2 basis: 1, t (0, 1)
Index ba(Index b, Index a) { return b * 2 + a; }  // B (x) A flat
Index ab(Index a, Index b) { return a * 2 + b; }  // A (x) B flat

}  // namespace

TEST_CASE("flip R-map passes all axioms") {
  RMap r = RMap::make_flip(cyclic_group_algebra(2), dual_numbers());
  CHECK(r.check().all_pass());
  // invert_rmap(flip) = flip
  RMap sw = r.swapped();
  CHECK(sw.check().all_pass());
  CHECK(sw.forward().mat ==
        flip_map(TensorSpace({dual_numbers()}),
                 TensorSpace({cyclic_group_algebra(2)}))
            .mat);
}

TEST_CASE("P1 R-map: R(t^r (x) s) = (-1)^r s (x) t^r") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  const RMap& r = p1.rmap();
  CHECK(r.check().all_pass());
  // R(1 (x) s) = s (x) 1
  CHECK(sparse_equal(r.forward().mat.col(ba(0, 1)), sparse_unit(ab(1, 0))));
  // R(t (x) s) = -(s (x) t)
  CHECK(sparse_equal(r.forward().mat.col(ba(1, 1)),
                     sparse_unit(ab(1, 1), Scalar(-1))));
  // R(t (x) 1) = 1 (x) t
  CHECK(sparse_equal(r.forward().mat.col(ba(1, 0)), sparse_unit(ab(0, 1))));
}

TEST_CASE("coefficient-corrupted P1 R fails quasitriangularity with a witness") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  SparseMatrix bad = p1.rmap().forward().mat;
  // rescale R(t (x) s): both quasitriangularity equations need coefficient
  // squares to cancel along t^2 = 1, so 2 breaks them while staying invertible
  bad.set(ab(1, 1), ba(1, 1), Scalar(2));
  RMap r = RMap::from_matrix(p1.A(), p1.B(), bad);
  CheckReport rep = r.check();
  CHECK_FALSE(rep.all_pass());
  bool qt_failed_with_witness = false;
  for (const auto& item : rep.items())
    if (!item.pass && item.witness && item.identity.find("R(") == 0)
      qt_failed_with_witness = true;
  CHECK(qt_failed_with_witness);
}

TEST_CASE("section 5.2 preset at N = 2: R and R^-1 formulas") {
  SmashAlgebra sm = module_algebra_5_2(2);
  const RMap& r = sm.rmap();
  CHECK(r.check().all_pass());
  // Taft(2) basis: 1 (0), d (1), g (2), gd (3); A basis: 1 (0), x (1)
  // R(d (x) x) = 1 (x) 1 - x (x) d   [(n)_q x^{n-1} (x) 1 + q^n x^n (x) d]
  {
    SparseVec col = r.forward().mat.col(1 * 2 + 1);
    SparseVec expect{{0, Scalar(1)}, {1 * 4 + 1, Scalar(-1)}};
    CHECK(sparse_equal(col, expect));
  }
  // R(g (x) x) = -x (x) g
  {
    SparseVec col = r.forward().mat.col(2 * 2 + 1);
    CHECK(sparse_equal(col, sparse_unit(1 * 4 + 2, Scalar(-1))));
  }
  // R^-1(x (x) d) = q^{-1} d (x) x - q^{-1}(1)_q 1 (x) 1 = -(d (x) x) + 1 (x) 1
  {
    SparseVec col = r.inverse().mat.col(1 * 4 + 1);
    SparseVec expect{{0 * 2 + 0, Scalar(1)}, {1 * 2 + 1, Scalar(-1)}};
    CHECK(sparse_equal(col, expect));
  }
  // Prop 1.2 round trip: the swapped R-map passes and double swap restores
  RMap sw = r.swapped();
  CHECK(sw.check().all_pass());
  CHECK(sw.swapped().forward().mat == r.forward().mat);
}

TEST_CASE("build_smash products in P1: (s#t)(s#1) = 0 and subalgebra embeddings") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  const AlgebraPtr& s = p1.algebra();
  // basis of A#B: (a, b) at a*2 + b; s#t = (1,1) -> 3, s#1 = (1,0) -> 2
  CHECK(s->mult(3, 2).empty());
  // (s#1)(1#t) = s#t, (1#t)(s#1) = -(s#t)
  CHECK(sparse_equal(s->mult(2, 1), sparse_unit(3)));
  CHECK(sparse_equal(s->mult(1, 2), sparse_unit(3, Scalar(-1))));
  // A embeds: (a#1)(a'#1) = aa'#1 over all basis pairs
  const AlgebraPtr& A = p1.A();
  const AlgebraPtr& B = p1.B();
  for (Index i = 0; i < A->dim(); ++i)
    for (Index k = 0; k < A->dim(); ++k) {
      SparseVec expect;
      for (const auto& e : A->mult(i, k))
        for (const auto& u : B->unit())
          sparse_axpy(expect, e.val * u.val,
                      sparse_unit(e.row * B->dim() + u.row));
      CHECK(sparse_equal(s->mult(i * B->dim() + 0, k * B->dim() + 0), expect));
    }
  // B embeds likewise
  for (Index j = 0; j < B->dim(); ++j)
    for (Index l = 0; l < B->dim(); ++l) {
      SparseVec expect;
      for (const auto& e : B->mult(j, l))
        for (const auto& u : A->unit())
          sparse_axpy(expect, e.val * u.val,
                      sparse_unit(u.row * B->dim() + e.row));
      CHECK(sparse_equal(s->mult(0 + j, 0 + l), expect));
    }
}

TEST_CASE("(1#g)(x#1) = -(x#g) in the 5.2 preset") {
  SmashAlgebra sm = module_algebra_5_2(2);
  // basis (a, h) at a*4 + h; 1#g = 2, x#1 = 4, x#g = 6
  CHECK(sparse_equal(sm.algebra()->mult(2, 4), sparse_unit(6, Scalar(-1))));
}

TEST_CASE("crossed products: trivial action gives the flip") {
  HopfAlgebra h = cyclic_group_hopf(3);
  AlgebraPtr a = dual_numbers();
  // trivial action h.a = eps(h) a
  TensorMap triv = embed_operator(h.counit(), TensorSpace(), TensorSpace({a}));
  RMap r = crossed_product_rmap(h, triv);
  CHECK(r.forward().mat ==
        flip_map(TensorSpace({h.alg()}), TensorSpace({a})).mat);
  CHECK(r.check().all_pass());
}

TEST_CASE("crossed products reject non-module-algebra actions") {
  HopfAlgebra h = cyclic_group_hopf(2);
  AlgebraPtr a = dual_numbers();
  TensorSpace src({h.alg(), a});
  SparseMatrix bad(2, src.dim32());
  // g.s = s + 1 is not multiplicative
  bad.set_col(0, sparse_unit(0));
  bad.set_col(1, sparse_unit(1));
  bad.set_col(2, sparse_unit(0));
  bad.set_col(3, SparseVec{{0, Scalar(1)}, {1, Scalar(1)}});
  TensorMap action(src, TensorSpace({a}), std::move(bad));
  CHECK_THROWS_AS(crossed_product_rmap(h, action), NotModuleAlgebra);
}

TEST_CASE("theta and gamma composites") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  const RMap& r = p1.rmap();
  // Theta_0 = R
  CHECK(r.theta(0).mat == r.forward().mat);
  // Theta_1(t (x) s (x) s) = s (x) s (x) t (signs cancel)
  TensorMap th1 = r.theta(1);
  Index src = 1 * 4 + (1 * 2 + 1);  // t (x) s (x) s
  Index dst = (1 * 2 + 1) * 2 + 1;  // s (x) s (x) t
  CHECK(sparse_equal(th1.mat.col(src), sparse_unit(dst)));
  // Theta_q(1 (x) a...) = a... (x) 1 (normality), q = 2
  TensorMap th2 = r.theta(2);
  for (Index a = 0; a < 8; ++a)
    CHECK(sparse_equal(th2.mat.col(0 * 8 + a), sparse_unit(a * 2 + 0)));
  // Theta composites against manual embeds: Theta_1 = R_23 R_12
  {
    TensorSpace sa({p1.A()});
    TensorMap r12 = embed_operator(r.forward(), TensorSpace(), sa);
    TensorMap r23 = embed_operator(r.forward(), sa, TensorSpace());
    CHECK(th1.mat == (r23 * r12).mat);
  }
  // theta_inv and gamma_inv really invert
  CHECK((r.theta(1) * r.theta_inv(1)).mat.is_identity());
  CHECK((r.theta_inv(1) * r.theta(1)).mat.is_identity());
  CHECK((r.gamma(2) * r.gamma_inv(2)).mat.is_identity());
  CHECK((r.gamma_inv(2) * r.gamma(2)).mat.is_identity());
}

TEST_CASE("flip-braid relations hold for the preset R-maps") {
  CHECK(check_flip_braid(pareigis_surrogate(1).rmap()).all_pass());
  CHECK(check_flip_braid(module_algebra_5_2(2).rmap()).all_pass());
  CHECK(check_flip_braid(
            tensor_flip(cyclic_group_algebra(2), cyclic_group_algebra(2))
                .rmap())
            .all_pass());
}

TEST_CASE("build_smash with a skipped check surfaces the broken product") {
  // a blatantly non-quasitriangular R: still invertible, fixes units
  AlgebraPtr a = dual_numbers();
  AlgebraPtr b = cyclic_group_algebra(2);
  SparseMatrix m(4, 4);
  m.set_col(ba(0, 0), sparse_unit(ab(0, 0)));
  m.set_col(ba(0, 1), sparse_unit(ab(1, 0)));
  m.set_col(ba(1, 0), sparse_unit(ab(0, 1)));
  m.set_col(ba(1, 1), SparseVec{{ab(0, 0), Scalar(1)}, {ab(1, 1), Scalar(1)}});
  RMap r = RMap::from_matrix(a, b, m);
  CHECK_FALSE(r.check().all_pass());
  CHECK_THROWS_AS(build_smash(r), AxiomViolation);
}
