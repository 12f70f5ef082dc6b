#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smashhc/algebra.hpp"
#include "smashhc/errors.hpp"

using namespace smashhc;

namespace {

// Local builders (independent of the preset catalog).

AlgebraPtr make_k2() {
  // k[Z/2] = k[x]/(x^2 - 1)
  std::vector<SparseVec> mult(4);
  auto idx = [](Index i, Index j) { return i * 2 + j; };
  mult[idx(0, 0)] = sparse_unit(0);
  mult[idx(0, 1)] = sparse_unit(1);
  mult[idx(1, 0)] = sparse_unit(1);
  mult[idx(1, 1)] = sparse_unit(0);
  return std::make_shared<FinDimAlgebra>("K2", std::vector<std::string>{"1", "x"},
                                         sparse_unit(0), std::move(mult));
}

AlgebraPtr make_dual() {
  // D = k[s]/s^2
  std::vector<SparseVec> mult(4);
  auto idx = [](Index i, Index j) { return i * 2 + j; };
  mult[idx(0, 0)] = sparse_unit(0);
  mult[idx(0, 1)] = sparse_unit(1);
  mult[idx(1, 0)] = sparse_unit(1);
  mult[idx(1, 1)] = {};
  return std::make_shared<FinDimAlgebra>("D", std::vector<std::string>{"1", "s"},
                                         sparse_unit(0), std::move(mult));
}

AlgebraPtr make_k3() {
  std::vector<SparseVec> mult(9);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) mult[i * 3 + j] = sparse_unit((i + j) % 3);
  return std::make_shared<FinDimAlgebra>(
      "K3", std::vector<std::string>{"1", "g", "g2"}, sparse_unit(0),
      std::move(mult));
}

}  // namespace

TEST_CASE("structure constant products") {
  auto d = make_dual();
  // s * s = 0
  CHECK(d->multiply(sparse_unit(1), sparse_unit(1)).empty());
  auto k2 = make_k2();
  // x * x = 1
  CHECK(sparse_equal(k2->multiply(sparse_unit(1), sparse_unit(1)), sparse_unit(0)));
  // unit * v = v for a mixed vector
  SparseVec v{{0, Scalar(Rat(2, 3))}, {1, Scalar(-5)}};
  CHECK(sparse_equal(k2->multiply(k2->unit(), v), v));
  CHECK(sparse_equal(k2->multiply(v, k2->unit()), v));
}

TEST_CASE("algebra validation rejects bad structure constants") {
  auto good = make_k2();
  CHECK_NOTHROW(good->check());
  // basis {1, a, b} with a*a = b, a*b = 1, b*a = 0: (a a) a = 0 but a (a a) = 1
  std::vector<SparseVec> mult(9);
  auto idx = [](Index i, Index j) { return i * 3 + j; };
  for (Index i = 0; i < 3; ++i) {
    mult[idx(0, i)] = sparse_unit(i);
    mult[idx(i, 0)] = sparse_unit(i);
  }
  mult[idx(1, 1)] = sparse_unit(2);
  mult[idx(1, 2)] = sparse_unit(0);
  mult[idx(2, 1)] = {};
  mult[idx(2, 2)] = {};
  FinDimAlgebra bad("bad", {"1", "a", "b"}, sparse_unit(0), std::move(mult));
  CHECK_THROWS_AS(bad.check(), AxiomViolation);

  // corrupted unit action: x*1 = -x
  std::vector<SparseVec> m2(4);
  m2[0] = sparse_unit(0);
  m2[1] = sparse_unit(1);
  m2[2] = sparse_unit(1, Scalar(-1));
  m2[3] = sparse_unit(0);
  FinDimAlgebra bad2("bad2", {"1", "x"}, sparse_unit(0), std::move(m2));
  CHECK_THROWS_AS(bad2.check(), AxiomViolation);
}

TEST_CASE("mixed-radix flat/multi round-trip, leftmost most significant") {
  auto k2 = make_k2();
  auto k3 = make_k3();
  TensorSpace s({k2, k3, k2});
  CHECK(s.dim() == 12);
  // leftmost most significant: (1, 2, 0) -> 1*6 + 2*2 + 0
  CHECK(s.flat({1, 2, 0}) == 10);
  for (std::size_t f = 0; f < s.dim(); ++f) CHECK(s.flat(s.multi(f)) == f);
  CHECK(s.label(10) == "x(x)g2(x)1");
  TensorSpace unit;  // ground field
  CHECK(unit.dim() == 1);
  CHECK(unit.arity() == 0);
}

TEST_CASE("flip maps: involution and composite three-cycle") {
  auto k2 = make_k2();
  auto d = make_dual();
  TensorSpace sd(std::vector<AlgebraPtr>{d});
  TensorSpace sk(std::vector<AlgebraPtr>{k2});

  // f^{1,1} on D (x) D is the 4x4 transposition; squares to identity
  TensorMap f11 = flip_map(sd, sd);
  CHECK((f11 * f11).mat.is_identity());
  CHECK(f11.mat.get(0, 0) == Scalar(1));
  CHECK(f11.mat.get(2, 1) == Scalar(1));  // (1,s) -> (s,1): col 0*2+1 -> row 1*2+0

  // flip twice with swapped arguments = identity
  TensorMap f_kd = flip_map(sk, sd);
  TensorMap f_dk = flip_map(sd, sk);
  CHECK((f_dk * f_kd).mat.is_identity());

  // f^{2,1} composed from adjacent transpositions on three distinct factors
  auto k3 = make_k3();
  TensorSpace sk3(std::vector<AlgebraPtr>{k3});
  // direct: f^{2,1} on (k2 (x) d) (x) k3
  TensorMap direct = flip_map(TensorSpace({k2, d}), sk3);
  // composite: swap (d,k3) then (k2,k3)
  TensorMap step1 = embed_operator(flip_map(sd, sk3), TensorSpace({k2}), TensorSpace());
  TensorMap step2 = embed_operator(flip_map(sk, sk3), TensorSpace(), TensorSpace({d}));
  CHECK((step2 * step1).mat == direct.mat);
}

TEST_CASE("embed_operator: identity embedding and rank scaling") {
  auto k2 = make_k2();
  TensorSpace sk(std::vector<AlgebraPtr>{k2});
  TensorMap id_embed =
      embed_operator(TensorMap::identity(sk), sk, sk);
  CHECK(id_embed.mat.is_identity());

  // rank(embedded op) = rank(op) * (pad dims)
  SparseMatrix m(2, 2);
  m.set_col(0, sparse_unit(0));
  TensorMap op(sk, sk, m);  // rank 1
  TensorMap emb = embed_operator(op, sk, sk);
  CHECK(rank(emb.mat) == 1 * 4);
}

TEST_CASE("disjointly supported embedded operators commute") {
  auto k2 = make_k2();
  auto d = make_dual();
  TensorSpace sk(std::vector<AlgebraPtr>{k2});
  TensorSpace sd(std::vector<AlgebraPtr>{d});
  // P acts on factors 0,1; Q on factor 2 of (k2, d, k2)
  SparseMatrix pm(4, 4);
  pm.set_col(0, sparse_unit(3, Scalar(2)));
  pm.set_col(2, sparse_unit(1, Scalar(-1)));
  TensorMap p(TensorSpace({k2, d}), TensorSpace({k2, d}), pm);
  SparseMatrix qm(2, 2);
  qm.set_col(1, sparse_unit(0, Scalar(Rat(1, 3))));
  TensorMap q(sk, sk, qm);
  TensorMap pe = embed_operator(p, TensorSpace(), sk);
  TensorMap qe = embed_operator(q, TensorSpace({k2, d}), TensorSpace());
  CHECK((pe * qe).mat == (qe * pe).mat);
}

TEST_CASE("face_multiply and insert_unit") {
  auto k2 = make_k2();
  TensorSpace s2 = TensorSpace::power(k2, 2);
  TensorMap mul = face_multiply(s2, 0);
  // (x, x) -> 1
  CHECK(sparse_equal(mul.mat.col(3), sparse_unit(0)));
  // (1, x) -> x
  CHECK(sparse_equal(mul.mat.col(1), sparse_unit(1)));

  TensorMap ins = insert_unit(TensorSpace({k2}), 0, k2);
  // x -> (1, x)
  CHECK(sparse_equal(ins.mat.col(1), sparse_unit(1)));
  TensorMap ins_end = insert_unit(TensorSpace({k2}), 1, k2);
  // x -> (x, 1)
  CHECK(sparse_equal(ins_end.mat.col(1), sparse_unit(2)));

  // degeneracy then face collapses to the identity: d_0 s_0 = id
  TensorMap d0 = face_multiply(ins.target, 0);
  CHECK((d0 * ins).mat.is_identity());

  CHECK_THROWS_AS(face_multiply(TensorSpace({k2, make_dual()}), 0),
                  DimensionMismatch);
}
