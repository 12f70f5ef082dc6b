#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "smashhc/errors.hpp"
#include "smashhc/scalar.hpp"
#include "smashhc/sparse_matrix.hpp"

using namespace smashhc;

namespace {

// Deterministic xorshift for the randomized property checks.
struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long small(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % (hi - lo + 1));
  }
};

SparseMatrix random_sparse(Rng& rng, Index rows, Index cols, int fill_pct) {
  std::vector<std::tuple<Index, Index, Scalar>> trips;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      if (rng.next() % 100 < static_cast<std::uint64_t>(fill_pct))
        trips.emplace_back(i, j, Scalar(Rat(rng.small(-4, 4), rng.small(1, 3))));
  return SparseMatrix::from_triplets(rows, cols, trips);
}

}  // namespace

TEST_CASE("rationals: canonical form and overflow promotion") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(0, 7).is_zero());
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
  CHECK(Rat(5, 7).inverse() == Rat(7, 5));
  CHECK(Rat(-5, 7).inverse() == Rat(-7, 5));

  // force the 128-bit path and the GMP promotion
  Rat big(INT64_MAX - 1, 3);
  Rat prod = big * big;
  CHECK(prod.is_big());
  Rat back = prod / big;
  CHECK(back == big);
  CHECK_FALSE(back.is_big());

  Rat sum(0);
  for (int i = 1; i <= 30; ++i) sum += Rat(1, i);
  Rat expect = Rat(9304682830147, 2329089562800);
  CHECK(sum == expect);

  CHECK(Rat::parse("3/4").value() == Rat(3, 4));
  CHECK(Rat::parse("-12").value() == Rat(-12));
  CHECK_FALSE(Rat::parse("1/0").has_value());
  CHECK_FALSE(Rat::parse("a").has_value());
  CHECK(Rat(7, -14).str() == "-1/2");
  CHECK(Rat(5).str() == "5");
}

TEST_CASE("cyclotomic arithmetic: zeta_N^N = 1 and Phi_N(zeta_N) = 0") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u, 24u}) {
    Scalar z = Scalar::zeta(n);
    Scalar p = Scalar(1);
    for (unsigned k = 0; k < n; ++k) p *= z;
    CHECK(p == Scalar(1));
    // evaluate Phi_N at zeta
    auto field = CyclotomicField::get(n);
    Scalar acc = Scalar(0);
    Scalar zp = Scalar(1);
    for (const Rat& c : field->modulus()) {
      acc += Scalar(c) * zp;
      zp *= z;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("cyclotomic: N = 2 collapses to rational arithmetic bit-exactly") {
  Scalar z = Scalar::zeta(2);
  CHECK(z.is_rational());
  CHECK(z.rational_value() == Rat(-1));
  CHECK((z * z) == Scalar(1));
}

TEST_CASE("cyclotomic inverses and q-integers at roots of unity") {
  Scalar q = Scalar::zeta(3);
  Scalar q2 = q * q;
  CHECK(q.inverse() == q2);
  CHECK((q.inverse() * q) == Scalar(1));
  // (3)_q = 1 + q + q^2 = 0 at a primitive 3rd root
  CHECK((Scalar(1) + q + q2).is_zero());
  // (2)_q = 1 + q is invertible
  Scalar two_q = Scalar(1) + q;
  CHECK((two_q * two_q.inverse()) == Scalar(1));
  CHECK_THROWS_AS((void)(Scalar::zeta(3) + Scalar::zeta(4)), FieldMismatch);
}

TEST_CASE("rank: zero and identity") {
  CHECK(rank(SparseMatrix(3, 3)) == 0);
  CHECK(rank(SparseMatrix::identity(4)) == 4);
}

TEST_CASE("rank of b on C_1(K2) vanishes (commutative algebra)") {
  // K2 = k[Z/2], basis {1, x}; b(x_0, x_1) = x_0 x_1 - x_1 x_0.
  // Brute-force the 4 basis tensors with a local multiplication table.
  auto mul = [](Index a, Index b) {
    // (i) * (j): x*x = 1
    SparseVec v;
    v.push_back({static_cast<Index>(a ^ b), Scalar(1)});
    return v;
  };
  SparseMatrix b(2, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index c = 0; c < 2; ++c) {
      SparseVec col = mul(a, c);
      sparse_axpy(col, Scalar(-1), mul(c, a));
      b.set_col(a * 2 + c, col);
    }
  CHECK(rank(b) == 0);
}

TEST_CASE("kernel: identity, flip on C_1(K2), and the section 5.3 mu-bar") {
  CHECK(kernel_basis(SparseMatrix::identity(5)).cols() == 0);

  // t on C_1 is the flip (x_0, x_1) -> (x_1, x_0); ker(1 - t) = symmetric
  // tensors, dimension 3 of 4.
  SparseMatrix t(4, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) t.set_col(a * 2 + b, sparse_unit(b * 2 + a));
  SparseMatrix one_minus_t = SparseMatrix::identity(4) - t;
  SparseMatrix ker = kernel_basis(one_minus_t);
  CHECK(ker.cols() == 3);
  CHECK((one_minus_t * ker).is_zero());

  // mu = 1(x)s - s(x)1 induces ms - sm on the commutative D = k[s]/s^2:
  // the zero map, kernel dimension 2.
  auto dmul = [](Index a, Index b) {
    SparseVec v;
    if (a + b < 2) v.push_back({static_cast<Index>(a + b), Scalar(1)});
    return v;
  };
  SparseMatrix mubar(2, 2);
  for (Index m = 0; m < 2; ++m) {
    SparseVec col = dmul(m, 1);                 // m*s
    sparse_axpy(col, Scalar(-1), dmul(1, m));   // - s*m
    mubar.set_col(m, col);
  }
  CHECK(mubar.is_zero());
  CHECK(kernel_basis(mubar).cols() == 2);
}

TEST_CASE("rank-nullity and product rank bound on random sparse matrices") {
  Rng rng;
  for (int trial = 0; trial < 12; ++trial) {
    Index r = static_cast<Index>(2 + rng.next() % 7);
    Index c = static_cast<Index>(2 + rng.next() % 7);
    Index k = static_cast<Index>(2 + rng.next() % 7);
    SparseMatrix m = random_sparse(rng, r, c, 35);
    SparseMatrix n = random_sparse(rng, c, k, 35);
    CHECK(kernel_basis(m).cols() + rank(m) == m.cols());
    Index rmn = rank(m * n);
    CHECK(rmn <= rank(m));
    CHECK(rmn <= rank(n));
    // kernel columns actually lie in the kernel
    SparseMatrix kb = kernel_basis(m);
    CHECK((m * kb).is_zero());
  }
}

TEST_CASE("elimination is deterministic") {
  Rng rng;
  SparseMatrix m = random_sparse(rng, 9, 14, 30);
  SparseMatrix k1 = kernel_basis(m);
  SparseMatrix k2 = kernel_basis(m);
  CHECK(k1 == k2);
  CHECK(image_basis(m) == image_basis(m));
}

TEST_CASE("canonical bases do not depend on the generating set") {
  Rng rng;
  SparseMatrix m = random_sparse(rng, 8, 5, 50);
  // shuffle + mix columns: same span
  SparseMatrix mixed(8, 7);
  SparseVec c0 = m.col(0);
  sparse_axpy(c0, Scalar(Rat(3, 2)), m.col(1));
  mixed.set_col(0, m.col(4));
  mixed.set_col(1, c0);
  mixed.set_col(2, m.col(3));
  mixed.set_col(3, m.col(1));
  mixed.set_col(4, m.col(0));
  mixed.set_col(5, m.col(2));
  SparseVec c6 = m.col(2);
  sparse_axpy(c6, Scalar(-2), m.col(4));
  mixed.set_col(6, c6);
  CHECK(image_basis(m) == image_basis(mixed));
}

TEST_CASE("subquotient dimensions") {
  // Z = full 4-dimensional space, B = 0
  CHECK(subquotient_dim(4, SparseMatrix::identity(4), SparseMatrix(4, 0)) == 4);
  // Z = B
  SparseMatrix z = SparseMatrix::identity(3);
  CHECK(subquotient_dim(3, z, z) == 0);
  // D = k[s]/s^2: Z = ker(0) = D, B = im(2s.) = span{s}
  SparseMatrix b(2, 1);
  b.set_col(0, sparse_unit(1, Scalar(2)));
  CHECK(subquotient_dim(2, SparseMatrix::identity(2), b) == 1);
  // containment violation
  SparseMatrix z2(3, 1);
  z2.set_col(0, sparse_unit(0));
  SparseMatrix b2(3, 1);
  b2.set_col(0, sparse_unit(1));
  CHECK_THROWS_AS(subquotient_dim(3, z2, b2), ContainmentViolation);
}

TEST_CASE("induced maps on subquotients") {
  // identity induces identity
  SparseMatrix b(3, 1);
  b.set_col(0, sparse_unit(2));
  Subquotient q = Subquotient::full_mod(3, b);
  CHECK(q.dim() == 2);
  SparseMatrix ind = induced_map(SparseMatrix::identity(3), q, q);
  CHECK(ind.is_identity());

  // a map that does not preserve the divided subspace: span{e2} -> e0
  SparseMatrix mbad(3, 3);
  mbad.set_col(2, sparse_unit(0));
  CHECK_THROWS_AS(induced_map(mbad, q, q), NotWellDefined);

  // a map whose image leaves Z
  SparseMatrix z(3, 1);
  z.set_col(0, sparse_unit(0));
  Subquotient sub = Subquotient::sub_only(3, z);
  SparseMatrix mout(3, 3);
  mout.set_col(0, sparse_unit(1));
  CHECK_THROWS_AS(induced_map(mout, sub, sub), NotWellDefined);
}

TEST_CASE("monomial and general inverses") {
  SparseMatrix p(3, 3);
  p.set_col(0, sparse_unit(2, Scalar(Rat(1, 2))));
  p.set_col(1, sparse_unit(0, Scalar(-1)));
  p.set_col(2, sparse_unit(1, Scalar(3)));
  CHECK(p.is_monomial());
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());

  Rng rng;
  for (int trial = 0; trial < 8; ++trial) {
    SparseMatrix m = random_sparse(rng, 5, 5, 60);
    if (rank(m) < 5) {
      CHECK_THROWS_AS(m.inverse(), NotInvertible);
    } else {
      CHECK((m * m.inverse()).is_identity());
    }
  }
  CHECK_THROWS_AS(SparseMatrix(3, 3).inverse(), NotInvertible);
}

TEST_CASE("matrix powers including negative exponents") {
  SparseMatrix t(3, 3);
  t.set_col(0, sparse_unit(1));
  t.set_col(1, sparse_unit(2));
  t.set_col(2, sparse_unit(0));
  CHECK(t.pow(3).is_identity());
  CHECK(t.pow(-1) == t.pow(2));
  CHECK((t.pow(-2) * t.pow(2)).is_identity());
  CHECK(t.pow(0).is_identity());
}

TEST_CASE("scalar serialization strings") {
  CHECK(Scalar(Rat(3, 4)).str() == "3/4");
  CHECK(Scalar(Rat(-7)).str() == "-7");
  Scalar z = Scalar::zeta(4);
  CHECK(z.str() == "zeta4[0,1]");
}
