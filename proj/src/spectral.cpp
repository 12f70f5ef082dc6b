#include "smashhc/spectral.hpp"

#include <sstream>

namespace smashhc {

namespace {

std::string at(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

TensorMap unit_map_of(const AlgebraPtr& a) {
  SparseMatrix m(a->dim(), 1);
  m.set_col(0, a->unit());
  return TensorMap(TensorSpace(), TensorSpace({a}), std::move(m));
}

}  // namespace

// ---- bimodules ---------------------------------------------------------------

SparseMatrix column_left_action(const CylindricalModule& cyl, std::size_t p) {
  const AlgebraPtr& A = cyl.smash().A();
  TensorMap ga = cyl.smash().rmap().gamma(p);
  TensorMap emb = embed_operator(ga, TensorSpace(), TensorSpace({A}));
  return (face_multiply(emb.target, p + 1) * emb).mat;
}

SparseMatrix column_right_action(const CylindricalModule& cyl, std::size_t p) {
  const AlgebraPtr& A = cyl.smash().A();
  TensorSpace src = TensorSpace::concat(cyl.cell(p, 0).space, TensorSpace({A}));
  return face_multiply(src, p + 1).mat;
}

CheckReport check_column_bimodule(const CylindricalModule& cyl, std::size_t p) {
  CheckReport rep("column bimodule C_" + std::to_string(p) + "(natural B)");
  const AlgebraPtr& A = cyl.smash().A();
  TensorSpace m = cyl.cell(p, 0).space;
  TensorSpace sa({A});
  TensorMap left(TensorSpace::concat(sa, m), m, column_left_action(cyl, p));
  TensorMap right(TensorSpace::concat(m, sa), m, column_right_action(cyl, p));
  rep.check_equal("1.x = x", "", left * insert_unit(m, 0, A),
                  TensorMap::identity(m));
  rep.check_equal("x.1 = x", "", right * insert_unit(m, m.arity(), A),
                  TensorMap::identity(m));
  {
    TensorSpace aam = TensorSpace::concat(sa, TensorSpace::concat(sa, m));
    TensorMap lhs = left * face_multiply(aam, 0);
    TensorMap rhs = left * embed_operator(left, sa, TensorSpace());
    rep.check_equal("(a a').x = a.(a'.x)", "", lhs, rhs);
  }
  {
    TensorMap lhs = right * embed_operator(right, TensorSpace(), sa);
    TensorMap rhs =
        right * face_multiply(TensorSpace::concat(m, TensorSpace({A, A})),
                              m.arity());
    rep.check_equal("(x.a).a' = x.(a a')", "", lhs, rhs);
  }
  {
    TensorMap lhs = right * embed_operator(left, TensorSpace(), sa);
    TensorMap rhs = left * embed_operator(right, sa, TensorSpace());
    rep.check_equal("(a.x).a' = a.(x.a')", "", lhs, rhs);
  }
  return rep;
}

SparseMatrix row_left_action(const CylindricalModule& cyl, std::size_t q) {
  const AlgebraPtr& B = cyl.smash().B();
  TensorSpace src = TensorSpace::concat(TensorSpace({B}), cyl.cell(0, q).space);
  return face_multiply(src, 0).mat;
}

SparseMatrix row_right_action(const CylindricalModule& cyl, std::size_t q) {
  const AlgebraPtr& B = cyl.smash().B();
  TensorMap th_inv = cyl.smash().rmap().theta_inv(q);
  TensorMap emb = embed_operator(th_inv, TensorSpace({B}), TensorSpace());
  return (face_multiply(emb.target, 0) * emb).mat;
}

CheckReport check_row_bimodule(const CylindricalModule& cyl, std::size_t q) {
  CheckReport rep("row bimodule C_" + std::to_string(q) + "(A_B natural)");
  const AlgebraPtr& B = cyl.smash().B();
  TensorSpace m = cyl.cell(0, q).space;
  TensorSpace sb({B});
  TensorMap left(TensorSpace::concat(sb, m), m, row_left_action(cyl, q));
  TensorMap right(TensorSpace::concat(m, sb), m, row_right_action(cyl, q));
  rep.check_equal("1.x = x", "", left * insert_unit(m, 0, B),
                  TensorMap::identity(m));
  rep.check_equal("x.1 = x", "", right * insert_unit(m, m.arity(), B),
                  TensorMap::identity(m));
  {
    TensorSpace bbm = TensorSpace::concat(sb, TensorSpace::concat(sb, m));
    TensorMap lhs = left * face_multiply(bbm, 0);
    TensorMap rhs = left * embed_operator(left, sb, TensorSpace());
    rep.check_equal("(b b').x = b.(b'.x)", "", lhs, rhs);
  }
  {
    TensorMap lhs = right * embed_operator(right, TensorSpace(), sb);
    TensorMap rhs =
        right * face_multiply(TensorSpace::concat(m, TensorSpace({B, B})),
                              m.arity());
    rep.check_equal("(x.b).b' = x.(b b')", "", lhs, rhs);
  }
  {
    TensorMap lhs = right * embed_operator(left, TensorSpace(), sb);
    TensorMap rhs = left * embed_operator(right, sb, TensorSpace());
    rep.check_equal("(b.x).b' = b.(x.b')", "", lhs, rhs);
  }
  return rep;
}

// ---- Hochschild with coefficients ---------------------------------------------

SparseMatrix hochschild_coeff_differential(const CylindricalModule& cyl,
                                           std::size_t p, std::size_t q) {
  const TensorSpace& space = cyl.cell(p, q).space;
  const AlgebraPtr& A = cyl.smash().A();
  SparseMatrix acc(cyl.dim(p, q - 1), space.dim32());
  // (x.a_1 | a_2, ..., a_q): multiply a_0 a_1
  acc = acc + face_multiply(space, p + 1).mat;
  Scalar sign(1);
  for (std::size_t i = 1; i + 1 <= q - 1 + 1 && i < q; ++i) {
    sign = -sign;
    acc = acc + face_multiply(space, p + 1 + i).mat.scaled(sign);
  }
  // wrap-around: (-1)^q a_q . (x | a_1 ... a_{q-1})
  std::vector<std::size_t> perm(space.arity());
  perm[0] = space.arity() - 1;
  for (std::size_t k = 1; k < space.arity(); ++k) perm[k] = k - 1;
  TensorMap rot = permute_factors(space, perm);
  TensorMap left(TensorSpace::concat(TensorSpace({A}), cyl.cell(p, 0).space),
                 cyl.cell(p, 0).space, column_left_action(cyl, p));
  TensorMap wrap =
      embed_operator(left, TensorSpace(), TensorSpace::power(A, q - 1)) * rot;
  acc = acc + wrap.mat.scaled(Scalar(q % 2 == 0 ? 1 : -1));
  return acc;
}

CheckReport check_hochschild_differential_is_col_b(const CylindricalModule& cyl,
                                                   std::size_t p_max,
                                                   std::size_t q_max) {
  CheckReport rep("Hochschild coefficient differential vs barred b");
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t q = 1; q <= q_max; ++q)
      rep.check_equal("d(9) = b-bar", at(p, q),
                      hochschild_coeff_differential(cyl, p, q),
                      cyl.col_b(p, q));
  return rep;
}

HomologyTable hochschild_with_coefficients(const CylindricalModule& cyl,
                                           std::size_t p, std::size_t q_max) {
  ChainComplex cc;
  cc.name = "C(A, C_" + std::to_string(p) + "(natural B))";
  cc.dims.resize(q_max + 1);
  cc.d.resize(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q) cc.dims[q] = cyl.dim(p, q);
  for (std::size_t q = 1; q <= q_max; ++q)
    cc.d[q] = hochschild_coeff_differential(cyl, p, q);
  HomologyTable t = homology_dims(cc);
  t.name = "H(A, C_" + std::to_string(p) + "(natural B))";
  return t;
}

HomologyTable hochschild_with_coefficients_normalized(
    const CylindricalModule& cyl, std::size_t p, std::size_t q_max) {
  ChainComplex cc;
  cc.name = "normalized C(A, N_" + std::to_string(p) + ")";
  cc.dims.resize(q_max + 1);
  cc.d.resize(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q)
    cc.dims[q] = cyl.normalized_cell(p, q).dim();
  for (std::size_t q = 1; q <= q_max; ++q) cc.d[q] = cyl.norm_col_b(p, q);
  HomologyTable t = homology_dims(cc);
  t.name = "H(A, N_" + std::to_string(p) + ")";
  return t;
}

HomologyTable hochschild_b_with_coefficients_normalized(
    const CylindricalModule& cyl, std::size_t q, std::size_t p_max) {
  ChainComplex cc;
  cc.name = "normalized C(B, N_" + std::to_string(q) + ")";
  cc.dims.resize(p_max + 1);
  cc.d.resize(p_max + 1);
  for (std::size_t p = 0; p <= p_max; ++p)
    cc.dims[p] = cyl.normalized_cell(p, q).dim();
  for (std::size_t p = 1; p <= p_max; ++p) cc.d[p] = cyl.norm_row_b(p, q);
  HomologyTable t = homology_dims(cc);
  t.name = "H(B, N_" + std::to_string(q) + ")";
  return t;
}

// ---- coinvariants --------------------------------------------------------------

namespace {

// span{a.x - x.a} inside cell (n, 0)
SparseMatrix column_commutator_span(const CylindricalModule& cyl,
                                    std::size_t n) {
  const AlgebraPtr& A = cyl.smash().A();
  Index da = A->dim();
  Index dm = cyl.dim(n, 0);
  SparseMatrix left = column_left_action(cyl, n);    // cols: a * dm + x
  SparseMatrix right = column_right_action(cyl, n);  // cols: x * da + a
  SparseMatrix gens(dm, static_cast<Index>(da) * dm);
  for (Index a = 0; a < da; ++a)
    for (Index x = 0; x < dm; ++x) {
      SparseVec v = left.col(a * dm + x);
      sparse_axpy(v, Scalar(-1), right.col(x * da + a));
      gens.set_col(a * dm + x, std::move(v));
    }
  return image_basis(gens);
}

SparseMatrix row_commutator_span(const CylindricalModule& cyl, std::size_t n) {
  const AlgebraPtr& B = cyl.smash().B();
  Index db = B->dim();
  Index dm = cyl.dim(0, n);
  SparseMatrix left = row_left_action(cyl, n);    // cols: b * dm + x
  SparseMatrix right = row_right_action(cyl, n);  // cols: x * db + b
  SparseMatrix gens(dm, static_cast<Index>(db) * dm);
  for (Index b = 0; b < db; ++b)
    for (Index x = 0; x < dm; ++x) {
      SparseVec v = left.col(b * dm + x);
      sparse_axpy(v, Scalar(-1), right.col(x * db + b));
      gens.set_col(b * dm + x, std::move(v));
    }
  return image_basis(gens);
}

}  // namespace

ParacyclicModule coinvariant_cyclic(const CylindricalModule& cyl,
                                    std::size_t n_max) {
  const AlgebraPtr& B = cyl.smash().B();
  std::vector<Subquotient> quot;
  quot.reserve(n_max + 2);
  for (std::size_t n = 0; n <= n_max + 1; ++n)
    quot.push_back(
        Subquotient::full_mod(cyl.dim(n, 0), column_commutator_span(cyl, n)));
  std::vector<PLevel> levels(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const TensorSpace& space = cyl.cell(n, 0).space;
    const AlgebraPtr& A = cyl.smash().A();
    PLevel& lv = levels[n];
    lv.dim = quot[n].dim();
    // tau = f^{n+1,1} (id^n (x) R): the flip swaps the block B^n (x) A with
    // the trailing B produced by R
    TensorSpace block =
        TensorSpace::concat(TensorSpace::power(B, n), TensorSpace({A}));
    TensorMap emb = embed_operator(cyl.smash().rmap().forward(),
                                   TensorSpace::power(B, n), TensorSpace());
    TensorMap tau = flip_map(block, TensorSpace({B})) * emb;
    TensorMap tau_inv =
        embed_operator(cyl.smash().rmap().inverse(), TensorSpace::power(B, n),
                       TensorSpace()) *
        flip_map(TensorSpace({B}), block);
    lv.t = induced_map(tau.mat, quot[n], quot[n]);
    lv.t_inv = induced_map(tau_inv.mat, quot[n], quot[n]);
    if (n >= 1) {
      lv.face.resize(n + 1);
      for (std::size_t i = 0; i < n; ++i)
        lv.face[i] =
            induced_map(face_multiply(space, i).mat, quot[n], quot[n - 1]);
      lv.face[n] = induced_map(
          face_multiply(cyl.cell(n, 0).space, 0).mat * tau.mat, quot[n],
          quot[n - 1]);
    }
    lv.degen.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      lv.degen[j] =
          induced_map(insert_unit(space, j + 1, B).mat, quot[n], quot[n + 1]);
  }
  return ParacyclicModule::from_direct(
      "C^A(natural B) of " + cyl.smash().algebra()->name(), std::move(levels));
}

ParacyclicModule coinvariant_cyclic_cols(const CylindricalModule& cyl,
                                         std::size_t n_max) {
  std::vector<Subquotient> quot;
  quot.reserve(n_max + 2);
  for (std::size_t n = 0; n <= n_max + 1; ++n)
    quot.push_back(
        Subquotient::full_mod(cyl.dim(0, n), row_commutator_span(cyl, n)));
  std::vector<PLevel> levels(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto& c = cyl.cell(0, n);
    PLevel& lv = levels[n];
    lv.dim = quot[n].dim();
    lv.t = induced_map(c.bt, quot[n], quot[n]);
    lv.t_inv = induced_map(c.bt_inv, quot[n], quot[n]);
    if (n >= 1) {
      lv.face.resize(n + 1);
      for (std::size_t j = 0; j <= n; ++j)
        lv.face[j] = induced_map(c.bface[j], quot[n], quot[n - 1]);
    }
    lv.degen.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      lv.degen[j] = induced_map(c.bdegen[j], quot[n], quot[n + 1]);
  }
  return ParacyclicModule::from_direct(
      "C^B(A_B natural) of " + cyl.smash().algebra()->name(),
      std::move(levels));
}

// ---- induced cyclic modules on homology ----------------------------------------

ParacyclicModule induced_cyclic_on_homology(const CylindricalModule& cyl,
                                            std::size_t q, std::size_t p_max) {
  std::vector<Subquotient> sub;
  sub.reserve(p_max + 2);
  for (std::size_t p = 0; p <= p_max + 1; ++p) {
    SparseMatrix z = q == 0 ? SparseMatrix::identity(cyl.dim(p, q))
                            : kernel_basis(cyl.col_b(p, q));
    SparseMatrix b = image_basis(cyl.col_b(p, q + 1));
    sub.emplace_back(cyl.dim(p, q), z, b);
  }
  std::vector<PLevel> levels(p_max + 1);
  for (std::size_t p = 0; p <= p_max; ++p) {
    const auto& c = cyl.cell(p, q);
    PLevel& lv = levels[p];
    lv.dim = sub[p].dim();
    lv.t = induced_map(c.t, sub[p], sub[p]);
    lv.t_inv = induced_map(c.t_inv, sub[p], sub[p]);
    if (p >= 1) {
      lv.face.resize(p + 1);
      for (std::size_t i = 0; i <= p; ++i)
        lv.face[i] = induced_map(c.face[i], sub[p], sub[p - 1]);
    }
    lv.degen.resize(p + 1);
    for (std::size_t i = 0; i <= p; ++i)
      lv.degen[i] = induced_map(c.degen[i], sub[p], sub[p + 1]);
  }
  return ParacyclicModule::from_direct(
      "H_" + std::to_string(q) + "(A, C(natural B))", std::move(levels));
}

// ---- phi / psi -----------------------------------------------------------------

TensorMap row_phi(const CylindricalModule& cyl, std::size_t p, std::size_t q) {
  const AlgebraPtr& A = cyl.smash().A();
  const AlgebraPtr& B = cyl.smash().B();
  // source: B (x) A^{(q+1)} (x) B^{(x)p}
  std::vector<AlgebraPtr> f;
  f.push_back(B);
  for (std::size_t j = 0; j <= q; ++j) f.push_back(A);
  for (std::size_t i = 0; i < p; ++i) f.push_back(B);
  TensorMap acc = TensorMap::identity(TensorSpace(std::move(f)));
  TensorMap th_inv = cyl.smash().rmap().theta_inv(q);
  for (std::size_t k = 1; k <= p; ++k) {
    TensorSpace left = TensorSpace::power(B, k);
    TensorSpace right = TensorSpace::power(B, p - k);
    acc = embed_operator(th_inv, left, right) * acc;
  }
  return acc.with_spaces(acc.source, cyl.cell(p, q).space);
}

TensorMap row_psi(const CylindricalModule& cyl, std::size_t p, std::size_t q) {
  const AlgebraPtr& B = cyl.smash().B();
  TensorMap acc = TensorMap::identity(cyl.cell(p, q).space);
  TensorMap th = cyl.smash().rmap().theta(q);
  for (std::size_t k = p; k >= 1; --k) {
    TensorSpace left = TensorSpace::power(B, k);
    TensorSpace right = TensorSpace::power(B, p - k);
    acc = embed_operator(th, left, right) * acc;
    if (k == 1) break;
  }
  TensorMap ph = row_phi(cyl, p, q);
  return acc.with_spaces(cyl.cell(p, q).space, ph.source);
}

SparseMatrix hochschild_b_coeff_differential(const CylindricalModule& cyl,
                                             std::size_t p, std::size_t q) {
  const AlgebraPtr& B = cyl.smash().B();
  TensorMap ph = row_phi(cyl, p, q);
  const TensorSpace& space = ph.source;  // B (x) A^{(q+1)} (x) B^p
  TensorSpace msp = cyl.cell(0, q).space;
  SparseMatrix acc(static_cast<Index>(cyl.dim(0, q)) *
                       static_cast<Index>(TensorSpace::power(B, p - 1).dim()),
                   space.dim32());
  // (x.b_1 | b_2 ...): right action on the coefficient block
  {
    TensorMap right(TensorSpace::concat(msp, TensorSpace({B})), msp,
                    row_right_action(cyl, q));
    TensorMap term =
        embed_operator(right, TensorSpace(), TensorSpace::power(B, p - 1));
    acc = acc + term.mat;
  }
  Scalar sign(1);
  for (std::size_t i = 1; i < p; ++i) {
    sign = -sign;
    // multiply b_i b_{i+1}: factors are at positions (q+2) + (i-1), +i
    acc = acc + face_multiply(space, q + 1 + i).mat.scaled(sign);
  }
  {
    // (-1)^p b_p.(x | b_1 ... b_{p-1})
    std::vector<std::size_t> perm(space.arity());
    perm[0] = space.arity() - 1;
    for (std::size_t k = 1; k < space.arity(); ++k) perm[k] = k - 1;
    TensorMap rot = permute_factors(space, perm);
    TensorMap left(TensorSpace::concat(TensorSpace({B}), msp), msp,
                   row_left_action(cyl, q));
    TensorMap wrap =
        embed_operator(left, TensorSpace(), TensorSpace::power(B, p - 1)) *
        rot;
    acc = acc + wrap.mat.scaled(Scalar(p % 2 == 0 ? 1 : -1));
  }
  return acc;
}

CheckReport check_row_recoordinatization(const CylindricalModule& cyl,
                                         std::size_t p_max,
                                         std::size_t q_max) {
  CheckReport rep("phi/psi re-coordinatization");
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t q = 0; q <= q_max; ++q) {
      TensorMap ph = row_phi(cyl, p, q);
      TensorMap ps = row_psi(cyl, p, q);
      rep.check_equal("phi psi = id", at(p, q), (ph.mat * ps.mat),
                      SparseMatrix::identity(cyl.dim(p, q)));
      rep.check_equal("psi phi = id", at(p, q), (ps.mat * ph.mat),
                      SparseMatrix::identity(cyl.dim(p, q)));
      if (p == 0) {
        rep.check_equal("phi = id at p = 0", at(p, q), ph.mat,
                        SparseMatrix::identity(cyl.dim(0, q)));
      }
      if (p >= 1) {
        // psi b = delta psi
        SparseMatrix lhs = row_psi(cyl, p - 1, q).mat * cyl.row_b(p, q);
        SparseMatrix rhs = hochschild_b_coeff_differential(cyl, p, q) * ps.mat;
        rep.check_equal("psi b = delta psi", at(p, q), lhs, rhs);
        SparseMatrix lhs2 = row_phi(cyl, p - 1, q).mat *
                            hochschild_b_coeff_differential(cyl, p, q);
        SparseMatrix rhs2 = cyl.row_b(p, q) * ph.mat;
        rep.check_equal("phi delta = b phi", at(p, q), lhs2, rhs2);
      }
    }
  return rep;
}

ParacyclicModule induced_cyclic_on_homology_cols(const CylindricalModule& cyl,
                                                 std::size_t p,
                                                 std::size_t q_max) {
  // transported differential and operators through phi/psi
  auto transported_b = [&](std::size_t pp, std::size_t qq) {
    return row_psi(cyl, pp - 1, qq).mat * cyl.row_b(pp, qq) *
           row_phi(cyl, pp, qq).mat;
  };
  std::vector<Subquotient> sub;
  sub.reserve(q_max + 2);
  for (std::size_t q = 0; q <= q_max + 1; ++q) {
    Index d = cyl.dim(p, q);
    SparseMatrix z =
        p == 0 ? SparseMatrix::identity(d) : kernel_basis(transported_b(p, q));
    SparseMatrix b = image_basis(transported_b(p + 1, q));
    sub.emplace_back(d, z, b);
  }
  std::vector<PLevel> levels(q_max + 1);
  for (std::size_t q = 0; q <= q_max; ++q) {
    const auto& c = cyl.cell(p, q);
    TensorMap ph = row_phi(cyl, p, q);
    TensorMap ps = row_psi(cyl, p, q);
    PLevel& lv = levels[q];
    lv.dim = sub[q].dim();
    lv.t = induced_map(row_psi(cyl, p, q).mat * c.bt * ph.mat, sub[q], sub[q]);
    lv.t_inv =
        induced_map(row_psi(cyl, p, q).mat * c.bt_inv * ph.mat, sub[q], sub[q]);
    if (q >= 1) {
      lv.face.resize(q + 1);
      for (std::size_t j = 0; j <= q; ++j)
        lv.face[j] = induced_map(
            row_psi(cyl, p, q - 1).mat * c.bface[j] * ph.mat, sub[q],
            sub[q - 1]);
    }
    lv.degen.resize(q + 1);
    for (std::size_t j = 0; j <= q; ++j)
      lv.degen[j] = induced_map(
          row_psi(cyl, p, q + 1).mat * c.bdegen[j] * ph.mat, sub[q],
          sub[q + 1]);
  }
  return ParacyclicModule::from_direct(
      "H_" + std::to_string(p) + "(B, C(A_B natural))", std::move(levels));
}

// ---- filtered complexes and the spectral sequence -------------------------------

int FilteredComplex::max_weight(std::size_t n) const {
  int w = 0;
  for (int x : weight[n]) w = std::max(w, x);
  return w;
}

void FilteredComplex::validate() const {
  if (dims.size() != d.size() || dims.size() != weight.size() || dims.empty())
    throw NotAComplex(name + ": malformed filtered complex");
  for (std::size_t n = 0; n <= top(); ++n)
    if (weight[n].size() != dims[n])
      throw NotAComplex(name + ": weight table size mismatch");
  for (std::size_t n = 1; n <= top(); ++n) {
    if (d[n].cols() != dims[n] || d[n].rows() != dims[n - 1])
      throw NotAComplex(name + ": differential shape mismatch");
    if (n >= 2 && !(d[n - 1] * d[n]).is_zero())
      throw NotAComplex(name + ": d d != 0 at degree " + std::to_string(n));
    for (Index c = 0; c < d[n].cols(); ++c)
      for (const auto& e : d[n].col(c))
        if (weight[n - 1][e.row] > weight[n][c])
          throw NotAComplex(name + ": differential raises the filtration at " +
                            std::to_string(n));
  }
}

FilteredComplex filtered_total(const TotalMixedComplex& tot, CoefficientW w,
                               bool rows) {
  FilteredComplex fc;
  ChainComplex cc = boxtimes_complex(tot.mixed, w);
  fc.name = cc.name + (rows ? " / row filtration" : " / column filtration");
  fc.dims = cc.dims;
  fc.d = cc.d;
  fc.weight.resize(cc.dims.size());
  for (std::size_t n = 0; n < cc.dims.size(); ++n) {
    fc.weight[n].assign(cc.dims[n], 0);
    Index off = 0;
    for (std::size_t l = 0; 2 * l <= n; ++l) {
      std::size_t lvl = n - 2 * l;
      if (w == CoefficientW::hochschild && l > 0) break;
      for (std::size_t ci = 0; ci < tot.cells[lvl].size(); ++ci) {
        auto [i, j] = tot.cells[lvl][ci];
        Index cdim = tot.offsets[lvl][ci + 1] - tot.offsets[lvl][ci];
        int wt = static_cast<int>((rows ? i : j) + 2 * l);
        for (Index k = 0; k < cdim; ++k) fc.weight[n][off + k] = wt;
        off += cdim;
      }
    }
    if (off != fc.dims[n])
      throw NotAComplex("filtered_total: weight layout mismatch");
  }
  fc.validate();
  return fc;
}

SpectralSequence::SpectralSequence(FilteredComplex fc) : fc_(std::move(fc)) {
  fc_.validate();
  std::size_t K = fc_.top();
  int maxw = 0;
  for (std::size_t n = 0; n <= K; ++n) maxw = std::max(maxw, fc_.max_weight(n));
  r_max_ = maxw + 1;

  // F^p basis columns per degree
  auto f_basis = [&](std::size_t n, int p) {
    std::vector<Index> cols;
    for (Index k = 0; k < fc_.dims[n]; ++k)
      if (fc_.weight[n][k] <= p) cols.push_back(k);
    SparseMatrix m(fc_.dims[n], static_cast<Index>(cols.size()));
    for (Index c = 0; c < m.cols(); ++c) m.set_col(c, sparse_unit(cols[c]));
    return m;
  };

  // Z^r_{p,n} = { x in F^p_n : d x in F^{p-r}_{n-1} }, as ambient columns
  auto z_space = [&](int r, int p, std::size_t n) {
    if (p < 0) return SparseMatrix(fc_.dims[n], 0);
    SparseMatrix f = f_basis(n, p);
    if (n == 0 || r == 0) return f;
    // rows of d with weight > p - r, applied to the F^p basis
    SparseMatrix dn(fc_.dims[n - 1], f.cols());
    for (Index c = 0; c < f.cols(); ++c) {
      SparseVec full = fc_.d[n].apply(f.col(c));
      SparseVec high;
      for (const auto& e : full)
        if (fc_.weight[n - 1][e.row] > p - r) high.push_back(e);
      dn.set_col(c, std::move(high));
    }
    SparseMatrix ker = kernel_basis(dn);
    SparseMatrix out(fc_.dims[n], ker.cols());
    for (Index c = 0; c < ker.cols(); ++c) {
      SparseVec v;
      for (const auto& e : ker.col(c)) sparse_axpy(v, e.val, f.col(e.row));
      out.set_col(c, std::move(v));
    }
    return out;
  };

  for (int r = 0; r <= r_max_; ++r) {
    for (std::size_t n = 0; n <= K; ++n) {
      int mw = fc_.max_weight(n);
      for (int p = 0; p <= mw; ++p) {
        SparseMatrix z = z_space(r, p, n);
        SparseMatrix denom(fc_.dims[n], 0);
        if (r == 0) {
          denom = z_space(0, p - 1, n);
        } else {
          denom = z_space(r - 1, p - 1, n);
          if (n + 1 <= K) {
            SparseMatrix zin = z_space(r - 1, p + r - 1, n + 1);
            SparseMatrix img(fc_.dims[n], zin.cols());
            for (Index c = 0; c < zin.cols(); ++c)
              img.set_col(c, fc_.d[n + 1].apply(zin.col(c)));
            denom = denom.hstack(img);
          }
        }
        Ent ent{Subquotient(fc_.dims[n], z, denom), 0};
        entries_.emplace(std::make_tuple(r, p, n), std::move(ent));
      }
    }
  }
  // d^r ranks via the induced maps
  for (int r = 0; r <= r_max_; ++r)
    for (std::size_t n = 1; n <= K; ++n) {
      int mw = fc_.max_weight(n);
      for (int p = 0; p <= mw; ++p) {
        auto src = entries_.find(std::make_tuple(r, p, n));
        if (src == entries_.end() || src->second.sq.dim() == 0) continue;
        auto dst = entries_.find(std::make_tuple(r, p - r, n - 1));
        if (p - r < 0 || dst == entries_.end()) {
          src->second.dr_rank = 0;
          continue;
        }
        SparseMatrix ind =
            induced_map(fc_.d[n], src->second.sq, dst->second.sq);
        src->second.dr_rank = rank(ind);
      }
    }
}

const SpectralSequence::Ent* SpectralSequence::entry(int r, int p,
                                                     std::size_t n) const {
  auto it = entries_.find(std::make_tuple(r, p, n));
  return it == entries_.end() ? nullptr : &it->second;
}

Index SpectralSequence::dim(int r, int p, int q) const {
  if (p < 0 || p + q < 0) return 0;
  std::size_t n = static_cast<std::size_t>(p + q);
  if (n > fc_.top()) return 0;
  const Ent* e = entry(std::min(r, r_max_), p, n);
  return e ? e->sq.dim() : 0;
}

Index SpectralSequence::dr_rank(int r, int p, int q) const {
  if (p < 0 || p + q < 0) return 0;
  std::size_t n = static_cast<std::size_t>(p + q);
  if (n > fc_.top() || r > r_max_) return 0;
  const Ent* e = entry(r, p, n);
  return e ? e->dr_rank : 0;
}

Index SpectralSequence::einf_dim(int p, int q) const {
  return dim(r_max_, p, q);
}

int SpectralSequence::stable_page(int p, int q) const {
  if (dim(0, p, q) == 0 && dim(r_max_, p, q) == 0) return 0;
  int stable = r_max_;
  for (int r = r_max_; r >= 0; --r) {
    bool quiet = dr_rank(r, p, q) == 0 && dr_rank(r, p + r, q - r + 1) == 0 &&
                 dim(r, p, q) == dim(r_max_, p, q);
    if (!quiet) break;
    stable = r;
  }
  if (stable == r_max_ && (dr_rank(r_max_, p, q) != 0 ||
                           dr_rank(r_max_, p + r_max_, q - r_max_ + 1) != 0))
    throw TruncationTooSmall("spectral sequence not stabilized at (" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
  return stable;
}

bool SpectralSequence::degree_flagged(std::size_t n) const {
  return n + 1 >= fc_.top();
}

CheckReport SpectralSequence::verify_page_recomputation() const {
  CheckReport rep("page recomputation for " + fc_.name);
  for (int r = 1; r <= std::min(2, r_max_ - 1); ++r) {
    for (std::size_t n = 0; n <= fc_.top(); ++n) {
      if (degree_flagged(n)) continue;
      int mw = fc_.max_weight(n);
      for (int p = 0; p <= mw; ++p) {
        int q = static_cast<int>(n) - p;
        Index direct = dim(r + 1, p, q);
        Index from_homology =
            dim(r, p, q) - dr_rank(r, p, q) - dr_rank(r, p + r, q - r + 1);
        std::string loc = "r=" + std::to_string(r) + " " +
                          at(static_cast<std::size_t>(p), n - p);
        if (direct == from_homology)
          rep.record_pass("E^{r+1} = H(E^r, d^r)", loc);
        else
          rep.record_fail("E^{r+1} = H(E^r, d^r)", loc,
                          {static_cast<std::size_t>(p), "",
                           std::to_string(direct),
                           std::to_string(from_homology)});
      }
    }
  }
  return rep;
}

// ---- top-level runs --------------------------------------------------------------

SpectralRun spectral_sequence_run(const CylindricalModule& cyl, bool rows,
                                  CoefficientW w, std::size_t n_max) {
  SpectralRun run;
  run.rows = rows;
  run.w = w;
  TotalMixedComplex tot = cyl.total_mixed(n_max);
  run.ss = std::make_shared<SpectralSequence>(filtered_total(tot, w, rows));
  CheckReport rep("spectral sequence verifications (" +
                  std::string(rows ? "rows" : "columns") + ", W = " +
                  coefficient_w_name(w) + ")");
  const SpectralSequence& ss = *run.ss;
  std::size_t cmp_max = n_max >= 2 ? n_max - 2 : 0;

  // (a) E^1 equals the Hochschild homology with (normalized) coefficients
  {
    std::map<std::size_t, HomologyTable> tables;
    for (std::size_t c = 0; c <= cmp_max; ++c)
      tables.emplace(c, rows ? hochschild_with_coefficients_normalized(
                                   cyl, c, n_max - c)
                             : hochschild_b_with_coefficients_normalized(
                                   cyl, c, n_max - c));
    for (std::size_t n = 0; n <= cmp_max; ++n)
      for (std::size_t p = 0; p <= n; ++p) {
        std::size_t q = n - p;
        Index expect = 0;
        for (std::size_t l = 0; 2 * l <= p; ++l) {
          if (w == CoefficientW::hochschild && l > 0) break;
          std::size_t c = p - 2 * l;
          const HomologyTable& t = tables.at(c);
          if (q < t.dims.size() && !t.flagged[q]) expect += t.dims[q];
        }
        Index got = ss.dim(1, static_cast<int>(p), static_cast<int>(q));
        std::string loc = at(p, q);
        if (got == expect)
          rep.record_pass("(a) E^1 = H(coefficients) boxtimes W", loc);
        else
          rep.record_fail("(a) E^1 = H(coefficients) boxtimes W", loc,
                          {p, "", std::to_string(got), std::to_string(expect)});
      }
  }

  // (b) E^2 equals the cyclic homology of the induced cyclic modules
  {
    for (std::size_t q = 0; q <= cmp_max; ++q) {
      ParacyclicModule induced =
          rows ? induced_cyclic_on_homology(cyl, q, n_max)
               : induced_cyclic_on_homology_cols(cyl, q, n_max);
      CheckReport ax = induced.check_axioms(/*cyclic_mode=*/true);
      if (ax.all_pass())
        rep.record_pass("(b) induced module is cyclic",
                        "q=" + std::to_string(q));
      else
        rep.record_fail("(b) induced module is cyclic",
                        "q=" + std::to_string(q),
                        {q, "", ax.summary(), ""});
      HomologyTable hc = cyclic_homology(induced.mixed_complex(), w);
      for (std::size_t p = 0; p + q <= cmp_max; ++p) {
        if (p < hc.dims.size() && hc.flagged[p]) continue;
        Index expect = p < hc.dims.size() ? hc.dims[p] : 0;
        Index got = ss.dim(2, static_cast<int>(p), static_cast<int>(q));
        std::string loc = at(p, q);
        if (got == expect)
          rep.record_pass("(b) E^2 = HC(induced; W)", loc);
        else
          rep.record_fail("(b) E^2 = HC(induced; W)", loc,
                          {p, "", std::to_string(got), std::to_string(expect)});
      }
    }
  }

  // (c) convergence: total E^infinity dims equal HC(A # B; W)
  {
    ParacyclicModule direct = algebra_cyclic_module(cyl.smash().algebra(), n_max);
    HomologyTable hc = cyclic_homology(direct.mixed_complex(), w);
    for (std::size_t n = 0; n <= cmp_max; ++n) {
      if (hc.flagged[n]) continue;
      Index total = 0;
      for (std::size_t p = 0; p <= ss.complex().max_weight(n) && p <= 63; ++p)
        total += ss.einf_dim(static_cast<int>(p),
                             static_cast<int>(n) - static_cast<int>(p));
      std::string loc = "n=" + std::to_string(n);
      if (total == hc.dims[n])
        rep.record_pass("(c) sum E^inf = HC_n(A#B; W)", loc);
      else
        rep.record_fail("(c) sum E^inf = HC_n(A#B; W)", loc,
                        {n, "", std::to_string(total),
                         std::to_string(hc.dims[n])});
    }
  }
  rep.merge(ss.verify_page_recomputation());
  run.verifications = std::move(rep);
  return run;
}

CheckReport separable_collapse_check(const CylindricalModule& cyl, bool side_a,
                                     CoefficientW w, std::size_t n_max) {
  CheckReport rep(std::string("separable collapse (") +
                  (side_a ? "A" : "B") + " side)");
  SpectralRun run = spectral_sequence_run(cyl, /*rows=*/side_a, w, n_max);
  std::size_t cmp_max = n_max >= 2 ? n_max - 2 : 0;
  const SpectralSequence& ss = *run.ss;
  for (std::size_t n = 0; n <= cmp_max; ++n)
    for (std::size_t p = 0; p <= n; ++p) {
      std::size_t q = n - p;
      if (q == 0) continue;
      Index got = ss.dim(2, static_cast<int>(p), static_cast<int>(q));
      std::string loc = at(p, q);
      if (got == 0)
        rep.record_pass("E^2_{p,q} = 0 for q > 0", loc);
      else
        rep.record_fail("E^2_{p,q} = 0 for q > 0", loc,
                        {p, "", std::to_string(got), "0"});
    }
  ParacyclicModule coin = side_a ? coinvariant_cyclic(cyl, n_max)
                                 : coinvariant_cyclic_cols(cyl, n_max);
  CheckReport ax = coin.check_axioms(true);
  if (ax.all_pass())
    rep.record_pass("coinvariant module is cyclic", "");
  else
    rep.record_fail("coinvariant module is cyclic", "", {0, "", ax.summary(), ""});
  HomologyTable hc_coin = cyclic_homology(coin.mixed_complex(), w);
  ParacyclicModule direct = algebra_cyclic_module(cyl.smash().algebra(), n_max);
  HomologyTable hc = cyclic_homology(direct.mixed_complex(), w);
  for (std::size_t n = 0; n <= cmp_max; ++n) {
    if (hc.flagged[n] || hc_coin.flagged[n]) continue;
    std::string loc = "n=" + std::to_string(n);
    if (hc.dims[n] == hc_coin.dims[n])
      rep.record_pass("HC_n(A#B; W) = HC_n(coinvariants; W)", loc);
    else
      rep.record_fail("HC_n(A#B; W) = HC_n(coinvariants; W)", loc,
                      {n, "", std::to_string(hc.dims[n]),
                       std::to_string(hc_coin.dims[n])});
  }
  rep.merge(run.verifications);
  return rep;
}

}  // namespace smashhc
