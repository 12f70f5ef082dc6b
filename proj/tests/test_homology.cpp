#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/cylindrical.hpp"
#include "smashhc/homology.hpp"
#include "smashhc/presets.hpp"

using namespace smashhc;
using namespace smashhc::presets;

TEST_CASE("homology of zero differentials is the space dimensions") {
  ChainComplex cc;
  cc.name = "zero";
  cc.dims = {3, 5, 2};
  cc.d = {SparseMatrix(), SparseMatrix(3, 5), SparseMatrix(5, 2)};
  HomologyTable t = homology_dims(cc);
  CHECK(t.dims == std::vector<Index>{3, 5, 2});
  CHECK(t.flagged == std::vector<bool>{false, true, true});
}

TEST_CASE("chain complex validation rejects d d != 0") {
  ChainComplex cc;
  cc.name = "bad";
  cc.dims = {1, 1, 1};
  cc.d = {SparseMatrix(), SparseMatrix::identity(1), SparseMatrix::identity(1)};
  CHECK_THROWS_AS(homology_dims(cc), NotAComplex);
}

TEST_CASE("HH(K2) = (2, 0, 0, 0) on unflagged degrees") {
  ParacyclicModule m = algebra_cyclic_module(cyclic_group_algebra(2), 5);
  HomologyTable t = hochschild_dims(m);
  CHECK(t.dims[0] == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(t.dims[n] == 0);
    CHECK_FALSE(t.flagged[n]);
  }
}

TEST_CASE("HH(D) = (2, 1, 1, 1) agrees with the small-resolution oracle") {
  ParacyclicModule m = algebra_cyclic_module(dual_numbers(), 5);
  HomologyTable bar = hochschild_dims(m);
  CHECK(bar.dims[0] == 2);
  CHECK(bar.dims[1] == 1);
  CHECK(bar.dims[2] == 1);
  CHECK(bar.dims[3] == 1);
  SparseMatrix ls(2, 2), rs(2, 2);
  ls.set_col(0, sparse_unit(1));
  rs.set_col(0, sparse_unit(1));
  HomologyTable oracle = dual_numbers_resolution_homology(ls, rs, 3);
  for (std::size_t q = 0; q <= 3; ++q) CHECK(bar.dims[q] == oracle.dims[q]);
}

TEST_CASE("HC(K2) = (2, 0, 2) with lambda cross-check") {
  ParacyclicModule m = algebra_cyclic_module(cyclic_group_algebra(2), 4);
  HomologyTable hc = cyclic_homology(m.mixed_complex(), CoefficientW::cyclic);
  CHECK(hc.dims[0] == 2);
  CHECK(hc.dims[1] == 0);
  CHECK(hc.dims[2] == 2);
  CHECK_FALSE(hc.flagged[2]);
  HomologyTable lam = connes_lambda_dims(m);
  CHECK(hc.agrees_on_unflagged(lam));
  // hochschild coefficient module reduces to the b-complex
  HomologyTable hh1 = cyclic_homology(m.mixed_complex(), CoefficientW::hochschild);
  HomologyTable hh2 = hochschild_dims(m);
  CHECK(hh1.dims == hh2.dims);
}

TEST_CASE("HC_0 = dim(A/[A,A]) for the P1 smash algebra") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  ParacyclicModule m = algebra_cyclic_module(p1.algebra(), 2);
  HomologyTable hc = cyclic_homology(m.mixed_complex(), CoefficientW::cyclic);
  // independent commutator-space computation
  const AlgebraPtr& a = p1.algebra();
  Index d = a->dim();
  SparseMatrix comm(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      SparseVec v = a->mult(i, j);
      sparse_axpy(v, Scalar(-1), a->mult(j, i));
      comm.set_col(i * d + j, v);
    }
  Index expect = d - rank(comm);
  CHECK(hc.dims[0] == expect);
  CHECK(hc.dims[0] == 2);
}

TEST_CASE("negative and periodic coefficient modules are rejected") {
  CHECK_THROWS_AS(parse_coefficient_w("negative"), Unsupported);
  CHECK_THROWS_AS(parse_coefficient_w("periodic"), Unsupported);
  CHECK_THROWS_AS(parse_coefficient_w("frobnitz"), InputError);
  CHECK(parse_coefficient_w("hochschild") == CoefficientW::hochschild);
  CHECK(parse_coefficient_w("cyclic") == CoefficientW::cyclic);
}

TEST_CASE("lambda oracle refuses paracyclic modules") {
  CylindricalModule cyl(pareigis_surrogate(1));
  ParacyclicModule row = cyl.row_module(0, 2);
  CHECK_THROWS_AS(connes_lambda_dims(row), NotCyclic);
}

TEST_CASE("EZ route agreement for P1: C_*, diagonal, and total") {
  SmashAlgebra p1 = pareigis_surrogate(1);
  CylindricalModule cyl(p1);
  ParacyclicModule direct = algebra_cyclic_module(p1.algebra(), 4);
  ParacyclicModule diag = cyl.diagonal(4);
  TotalMixedComplex tot = cyl.total_mixed(4);

  HomologyTable hh_a = hochschild_dims(direct);
  HomologyTable hh_b = hochschild_dims(diag);
  HomologyTable hh_c =
      cyclic_homology(tot.mixed, CoefficientW::hochschild);
  CHECK(hh_a.agrees_on_unflagged(hh_b));
  CHECK(hh_a.agrees_on_unflagged(hh_c));

  HomologyTable hc_a =
      cyclic_homology(direct.mixed_complex(), CoefficientW::cyclic);
  HomologyTable hc_b =
      cyclic_homology(diag.mixed_complex(), CoefficientW::cyclic);
  HomologyTable hc_c = cyclic_homology(tot.mixed, CoefficientW::cyclic);
  CHECK(hc_a.agrees_on_unflagged(hc_b));
  CHECK(hc_a.agrees_on_unflagged(hc_c));

  // lambda-quotient cross-validation on both cyclic modules
  CHECK(connes_lambda_dims(direct).agrees_on_unflagged(hc_a));
  CHECK(connes_lambda_dims(diag).agrees_on_unflagged(hc_b));

  // SBI dimension consistency
  CHECK(sbi_consistency(hh_a, hc_a).all_pass());
}

TEST_CASE("EZ route agreement for tensor_flip(K2,K2)") {
  SmashAlgebra sm =
      tensor_flip(cyclic_group_algebra(2), cyclic_group_algebra(2));
  CylindricalModule cyl(sm);
  ParacyclicModule direct = algebra_cyclic_module(sm.algebra(), 3);
  ParacyclicModule diag = cyl.diagonal(3);
  TotalMixedComplex tot = cyl.total_mixed(3);
  HomologyTable hh_a = hochschild_dims(direct);
  HomologyTable hh_c = cyclic_homology(tot.mixed, CoefficientW::hochschild);
  CHECK(hh_a.agrees_on_unflagged(hochschild_dims(diag)));
  CHECK(hh_a.agrees_on_unflagged(hh_c));
  HomologyTable hc_a =
      cyclic_homology(direct.mixed_complex(), CoefficientW::cyclic);
  HomologyTable hc_c = cyclic_homology(tot.mixed, CoefficientW::cyclic);
  CHECK(hc_a.agrees_on_unflagged(hc_c));
  // K2 (x) K2 = k[Z/2 x Z/2]: HH_0 = 4, HH_n = 0 (n >= 1), HC = (4, 0, 4)
  CHECK(hh_a.dims[0] == 4);
  CHECK(hh_a.dims[1] == 0);
  CHECK(hc_a.dims[0] == 4);
  CHECK(hc_a.dims[1] == 0);
  CHECK(hc_a.dims[2] == 4);
}

TEST_CASE("SBI inequality detector catches impossible tables") {
  HomologyTable hh{"hh", {2, 0, 0}, {false, false, false}};
  HomologyTable hc{"hc", {2, 5, 2}, {false, false, false}};
  CHECK_FALSE(sbi_consistency(hh, hc).all_pass());
}
