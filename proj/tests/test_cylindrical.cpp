#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/cylindrical.hpp"
#include "smashhc/presets.hpp"

using namespace smashhc;
using namespace smashhc::presets;

TEST_CASE("P1: cylindrical certification at bound 2") {
  CylindricalModule cyl(pareigis_surrogate(1));
  CheckReport rep = cyl.certify(2, 2);
  if (!rep.all_pass()) MESSAGE(rep.summary());
  CHECK(rep.all_pass());
}

TEST_CASE("t-bar at (0,0) is R^-1 after the flip") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  CylindricalModule cyl(p1);
  // t-bar_{0,0}(b | a) = R^-1(a (x) b)
  TensorMap fl = flip_map(TensorSpace({p1.B()}), TensorSpace({p1.A()}));
  SparseMatrix expect = p1.rmap().inverse().mat * fl.mat;
  CHECK(cyl.cell(0, 0).bt == expect);
}

TEST_CASE("rows of A natural B are paracyclic but not cyclic (P1, q = 0)") {
  CylindricalModule cyl(pareigis_surrogate(1));
  ParacyclicModule row = cyl.row_module(0, 2);
  CHECK(row.check_axioms(/*cyclic_mode=*/false).all_pass());
  CHECK_FALSE(row.is_cyclic());
  // exhibit the violation at level 1: t^2 (1, t | s) = -(1, t | s)
  // cell (1,0) basis: (b0, b1, a) flat = (b0*2 + b1)*2 + a; (1,t|s) -> 3
  SparseMatrix t2 = cyl.cell(1, 0).t * cyl.cell(1, 0).t;
  CHECK(sparse_equal(t2.col(3), sparse_unit(3, Scalar(-1))));
  // Lemma 2.2 still holds on the paracyclic row: bB + Bb = 1 - T nontrivially
  CHECK(row.check_lemma22().all_pass());
  CHECK_FALSE(row.big_t(1).is_identity());
}

TEST_CASE("columns are paracyclic as well (P1, p = 0, 1)") {
  CylindricalModule cyl(pareigis_surrogate(1));
  for (std::size_t p = 0; p <= 1; ++p) {
    ParacyclicModule col = cyl.col_module(p, 2);
    CHECK(col.check_axioms(false).all_pass());
    CHECK(col.check_lemma22().all_pass());
  }
}

TEST_CASE("cylindrical condition at (1,1): (t t-bar)^2 = id") {
  CylindricalModule cyl(pareigis_surrogate(1));
  const auto& c = cyl.cell(1, 1);
  SparseMatrix tt = c.t * c.bt;
  CHECK((tt * tt).is_identity());
  CHECK((c.bt * c.t * c.bt * c.t).is_identity());
}

TEST_CASE("5.2 preset: cylindrical certification at bound 1 and cross signs") {
  CylindricalModule cyl(module_algebra_5_2(2));
  CHECK(cyl.certify(1, 1).all_pass());
  CHECK(cyl.check_cross_anticommutation(1, 1).all_pass());
}

TEST_CASE("diagonal of P1 is a genuine cyclic module") {
  CylindricalModule cyl(pareigis_surrogate(1));
  ParacyclicModule diag = cyl.diagonal(2);
  CHECK(diag.check_axioms(/*cyclic_mode=*/true).all_pass());
  // t at level 0 of the diagonal is the identity
  CHECK(diag.t(0).is_identity());
  // dimensions (dimA * dimB)^{n+1}
  for (std::size_t n = 0; n <= 2; ++n) {
    Index expect = 1;
    for (std::size_t k = 0; k <= n; ++k) expect *= 4;
    CHECK(diag.dim(n) == expect);
  }
}

TEST_CASE("Phi/Psi comparison for P1 to n = 2") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  CylindricalModule cyl(p1);
  // Phi_0 = R
  CHECK(cyl.phi(0).mat == p1.rmap().forward().mat);
  // Phi_0(t (x) s) = -(s # t)
  CHECK(sparse_equal(cyl.phi(0).mat.col(3), sparse_unit(3, Scalar(-1))));
  // Phi_n(1,...,1|1,...,1) = (1#1, ..., 1#1)
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK(sparse_equal(cyl.phi(n).mat.col(0), sparse_unit(0)));
  CheckReport rep = cyl.check_phi_psi(2);
  if (!rep.all_pass()) MESSAGE(rep.summary());
  CHECK(rep.all_pass());
}

TEST_CASE("total mixed complex of P1: identities and anticommutation") {
  CylindricalModule cyl(pareigis_surrogate(1));
  TotalMixedComplex tot = cyl.total_mixed(3);
  // C_0 has dimension dim A * dim B
  CHECK(tot.mixed.dims[0] == 4);
  CHECK(tot.mixed.check().all_pass());
  // bb . bb = 0 on degree 2 explicitly
  CHECK((tot.mixed.small[1] * tot.mixed.small[2]).is_zero());
  CHECK(cyl.check_cross_anticommutation(2, 2).all_pass());
}

TEST_CASE("tensor_flip cylindrical module certifies cleanly") {
  CylindricalModule cyl(
      tensor_flip(cyclic_group_algebra(2), cyclic_group_algebra(2)));
  CHECK(cyl.certify(2, 2).all_pass());
  ParacyclicModule diag = cyl.diagonal(2);
  CHECK(diag.check_axioms(true).all_pass());
}
