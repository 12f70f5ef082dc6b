#include "smashhc/hopf.hpp"

#include <algorithm>

namespace smashhc {

namespace {

TensorMap unit_map_of(const AlgebraPtr& a) {
  SparseMatrix m(a->dim(), 1);
  m.set_col(0, a->unit());
  return TensorMap(TensorSpace(), TensorSpace({a}), std::move(m));
}

}  // namespace

HopfAlgebra::HopfAlgebra(AlgebraPtr alg, TensorMap coproduct, TensorMap counit,
                         SparseMatrix antipode)
    : alg_(std::move(alg)),
      coproduct_(std::move(coproduct)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  TensorSpace sh({alg_});
  if (!coproduct_.source.compatible(sh) ||
      !coproduct_.target.compatible(TensorSpace({alg_, alg_})))
    throw DimensionMismatch(alg_->name() + ": coproduct must map H -> H(x)H");
  if (!counit_.source.compatible(sh) || counit_.target.arity() != 0)
    throw DimensionMismatch(alg_->name() + ": counit must map H -> k");
  if (antipode_.rows() != alg_->dim() || antipode_.cols() != alg_->dim())
    throw DimensionMismatch(alg_->name() + ": antipode shape mismatch");
  try {
    antipode_inv_ = antipode_.inverse();
  } catch (const NotInvertible&) {
    throw NotInvertible(alg_->name() + ": antipode is singular");
  }
}

TensorMap HopfAlgebra::delta_power(std::size_t k) const {
  TensorSpace sh({alg_});
  if (k == 0) return TensorMap::identity(sh);
  TensorMap acc = coproduct_;
  for (std::size_t i = 2; i <= k; ++i) {
    TensorMap step = embed_operator(coproduct_, TensorSpace(),
                                    TensorSpace::power(alg_, i - 1));
    acc = step * acc;
  }
  return acc;
}

TensorMap HopfAlgebra::unit_map() const { return unit_map_of(alg_); }

CheckReport HopfAlgebra::check() const {
  CheckReport rep("Hopf axioms for " + alg_->name());
  TensorSpace sh({alg_});
  TensorSpace shh({alg_, alg_});

  try {
    alg_->check();
    rep.record_pass("underlying algebra associative and unital", "");
  } catch (const AxiomViolation& e) {
    rep.record_fail("underlying algebra associative and unital", "",
                    {0, "", e.what(), ""});
  }

  {
    TensorMap lhs = embed_operator(coproduct_, TensorSpace(), sh) * coproduct_;
    TensorMap rhs = embed_operator(coproduct_, sh, TensorSpace()) * coproduct_;
    rep.check_equal("(Delta (x) id) Delta = (id (x) Delta) Delta", "", lhs, rhs);
  }
  {
    TensorMap lhs = embed_operator(counit_, TensorSpace(), sh) * coproduct_;
    rep.check_equal("(eps (x) id) Delta = id", "", lhs, TensorMap::identity(sh));
    TensorMap rhs = embed_operator(counit_, sh, TensorSpace()) * coproduct_;
    rep.check_equal("(id (x) eps) Delta = id", "", rhs, TensorMap::identity(sh));
  }
  {
    // Delta is an algebra map
    TensorMap lhs = coproduct_ * face_multiply(shh, 0);
    TensorMap dd = embed_operator(coproduct_, shh, TensorSpace()) *
                   embed_operator(coproduct_, TensorSpace(), sh);
    TensorMap swap = embed_operator(flip_map(sh, sh), sh, sh);
    TensorMap mm = face_multiply(TensorSpace({alg_, alg_, alg_}), 1) *
                   face_multiply(TensorSpace({alg_, alg_, alg_, alg_}), 0);
    rep.check_equal("Delta(xy) = Delta(x) Delta(y)", "", lhs, mm * swap * dd);
    TensorMap unit2(TensorSpace(), shh, [&] {
      SparseMatrix m(shh.dim32(), 1);
      SparseVec col;
      Index d = alg_->dim();
      for (const auto& e1 : alg_->unit())
        for (const auto& e2 : alg_->unit())
          col.push_back({e1.row * d + e2.row, e1.val * e2.val});
      std::sort(col.begin(), col.end(),
                [](const Entry& x, const Entry& y) { return x.row < y.row; });
      m.set_col(0, col);
      return m;
    }());
    rep.check_equal("Delta(1) = 1 (x) 1", "", coproduct_ * unit_map(), unit2);
  }
  {
    TensorMap lhs = counit_ * face_multiply(shh, 0);
    TensorMap rhs = counit_ * embed_operator(counit_, TensorSpace(), sh);
    rep.check_equal("eps(xy) = eps(x) eps(y)", "", lhs, rhs);
    TensorMap one(TensorSpace(), TensorSpace(), SparseMatrix::identity(1));
    rep.check_equal("eps(1) = 1", "", counit_ * unit_map(), one);
  }
  {
    TensorMap s(sh, sh, antipode_);
    TensorMap eta_eps = unit_map() * counit_;
    TensorMap lhs = face_multiply(shh, 0) *
                    embed_operator(s, TensorSpace(), sh) * coproduct_;
    rep.check_equal("m (S (x) id) Delta = eta eps", "", lhs, eta_eps);
    TensorMap rhs = face_multiply(shh, 0) *
                    embed_operator(s, sh, TensorSpace()) * coproduct_;
    rep.check_equal("m (id (x) S) Delta = eta eps", "", rhs, eta_eps);
  }
  rep.check_equal("S S^-1 = id", "", antipode_ * antipode_inv_,
                  SparseMatrix::identity(alg_->dim()));
  return rep;
}

HopfAlgebra dual_cop(const HopfAlgebra& h) {
  const AlgebraPtr& H = h.alg();
  Index d = H->dim();
  // product of H^* is the transpose of Delta_H; unit is eps_H
  std::vector<SparseVec> mult(static_cast<std::size_t>(d) * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      SparseVec out;
      for (Index k = 0; k < d; ++k) {
        Scalar c = h.coproduct().mat.get(i * d + j, k);
        if (!c.is_zero()) out.push_back({k, c});
      }
      mult[static_cast<std::size_t>(i) * d + j] = std::move(out);
    }
  SparseVec unit;
  for (Index i = 0; i < d; ++i) {
    Scalar c = h.counit().mat.get(0, i);
    if (!c.is_zero()) unit.push_back({i, c});
  }
  std::vector<std::string> labels(d);
  for (Index i = 0; i < d; ++i) labels[i] = H->label(i) + "*";
  auto dual = std::make_shared<FinDimAlgebra>(H->name() + "*cop",
                                              std::move(labels), std::move(unit),
                                              std::move(mult));
  TensorSpace sd({dual});
  // coproduct of H^{*cop}: <Delta_cop f_k, e_i (x) e_j> = [e_j e_i]_k
  SparseMatrix cop(sd.dim32() * sd.dim32(), sd.dim32());
  for (Index k = 0; k < d; ++k) {
    SparseVec col;
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        // coefficient of f_i (x) f_j: structure constant [e_j e_i -> e_k]
        for (const auto& e : H->mult(j, i))
          if (e.row == k) col.push_back({i * d + j, e.val});
      }
    std::sort(col.begin(), col.end(),
              [](const Entry& x, const Entry& y) { return x.row < y.row; });
    cop.set_col(k, col);
  }
  TensorMap coproduct(sd, TensorSpace({dual, dual}), std::move(cop));
  // counit: f_k -> f_k(1)
  SparseMatrix cu(1, d);
  for (const auto& e : H->unit()) cu.set(0, e.row, e.val);
  TensorMap counit(sd, TensorSpace(), std::move(cu));
  // antipode of H^{*cop} = (S_H^-1)^T
  SparseMatrix s = h.antipode_inv().transpose();
  return HopfAlgebra(dual, std::move(coproduct), std::move(counit),
                     std::move(s));
}

CheckReport check_matched_pair(const MatchedPair& p) {
  CheckReport rep("matched pair " + p.name);
  const AlgebraPtr& B = p.B.alg();
  const AlgebraPtr& H = p.H.alg();
  TensorSpace sb({B}), sh({H});
  const TensorMap& tl = p.act_left;   // H (x) B -> B
  const TensorMap& tr = p.act_right;  // H (x) B -> H
  const TensorMap& db = p.B.coproduct();
  const TensorMap& dh = p.H.coproduct();

  // module axioms
  rep.check_equal("1 |> b = b", "", tl * insert_unit(sb, 0, H),
                  TensorMap::identity(sb));
  {
    TensorSpace hhb({H, H, B});
    TensorMap lhs = tl * face_multiply(hhb, 0);
    TensorMap rhs = tl * embed_operator(tl, sh, TensorSpace());
    rep.check_equal("(hg) |> b = h |> (g |> b)", "", lhs, rhs);
  }
  rep.check_equal("h <| 1 = h", "", tr * insert_unit(sh, 1, B),
                  TensorMap::identity(sh));
  {
    TensorSpace hbb({H, B, B});
    TensorMap lhs = tr * face_multiply(hbb, 1);
    TensorMap rhs = tr * embed_operator(tr, TensorSpace(), sb);
    rep.check_equal("h <| (bc) = (h <| b) <| c", "", lhs, rhs);
  }
  // module-coalgebra axioms
  {
    TensorMap lhs = db * tl;
    TensorMap dd = embed_operator(db, TensorSpace({H, H}), TensorSpace()) *
                   embed_operator(dh, TensorSpace(), sb);
    TensorMap swap = embed_operator(flip_map(sh, sb), sh, sb);
    TensorMap acts = embed_operator(tl, TensorSpace({B}), TensorSpace()) *
                     embed_operator(tl, TensorSpace(), TensorSpace({H, B}));
    rep.check_equal("Delta_B(h |> b) = (h1 |> b1)(x)(h2 |> b2)", "", lhs,
                    acts * swap * dd);
  }
  {
    TensorMap lhs = p.B.counit() * tl;
    TensorMap rhs =
        p.B.counit() * embed_operator(p.H.counit(), TensorSpace(), sb);
    rep.check_equal("eps_B(h |> b) = eps_H(h) eps_B(b)", "", lhs, rhs);
  }
  {
    TensorMap lhs = dh * tr;
    TensorMap dd = embed_operator(db, TensorSpace({H, H}), TensorSpace()) *
                   embed_operator(dh, TensorSpace(), sb);
    TensorMap swap = embed_operator(flip_map(sh, sb), sh, sb);
    TensorMap acts = embed_operator(tr, TensorSpace({H}), TensorSpace()) *
                     embed_operator(tr, TensorSpace(), TensorSpace({H, B}));
    rep.check_equal("Delta_H(h <| b) = (h1 <| b1)(x)(h2 <| b2)", "", lhs,
                    acts * swap * dd);
    TensorMap ehs = p.H.counit() * tr;
    TensorMap rhs =
        p.B.counit() * embed_operator(p.H.counit(), TensorSpace(), sb);
    rep.check_equal("eps_H(h <| b) = eps_H(h) eps_B(b)", "", ehs, rhs);
  }

  // (m1)
  rep.check_equal("(m1a) h |> 1 = eps(h) 1", "", tl * insert_unit(sh, 1, B),
                  unit_map_of(B) * p.H.counit());
  {
    TensorSpace hbb({H, B, B});
    TensorMap lhs = tl * face_multiply(hbb, 1);
    TensorMap step1 = embed_operator(dh, TensorSpace(), TensorSpace({B, B}));
    TensorMap step2 = embed_operator(db, TensorSpace({H, H}), sb);
    TensorMap perm = embed_operator(flip_map(sh, sb), sh, TensorSpace({B, B}));
    TensorMap a1 = embed_operator(tl, TensorSpace(), TensorSpace({H, B, B}));
    TensorMap a2 = embed_operator(tr, sb, sb);
    TensorMap a3 = embed_operator(tl, sb, TensorSpace());
    TensorMap rhs = face_multiply(TensorSpace({B, B}), 0) * a3 * a2 * a1 *
                    perm * step2 * step1;
    rep.check_equal("(m1b) h |> (bc) = (h1 |> b1)((h2 <| b2) |> c)", "", lhs,
                    rhs);
  }
  // (m2)
  rep.check_equal("(m2a) 1 <| b = eps(b) 1", "", tr * insert_unit(sb, 0, H),
                  unit_map_of(H) * p.B.counit());
  {
    TensorSpace hhb({H, H, B});
    TensorMap lhs = tr * face_multiply(hhb, 0);
    TensorMap step1 = embed_operator(dh, sh, sb);          // (h, g1, g2, b)
    TensorMap step2 = embed_operator(db, TensorSpace({H, H, H}), TensorSpace());
    TensorMap perm =
        embed_operator(flip_map(sh, sb), TensorSpace({H, H}), sb);
    TensorMap a1 = embed_operator(tl, TensorSpace({H}), TensorSpace({H, B}));
    TensorMap a2 = embed_operator(tr, TensorSpace(), TensorSpace({H, B}));
    TensorMap a3 = embed_operator(tr, sh, TensorSpace());
    TensorMap rhs = face_multiply(TensorSpace({H, H}), 0) * a3 * a2 * a1 *
                    perm * step2 * step1;
    rep.check_equal("(m2b) (hg) <| b = (h <| (g1 |> b1))(g2 <| b2)", "", lhs,
                    rhs);
  }
  // (m3)
  {
    TensorMap dd = embed_operator(db, TensorSpace({H, H}), TensorSpace()) *
                   embed_operator(dh, TensorSpace(), sb);
    TensorMap swap = embed_operator(flip_map(sh, sb), sh, sb);
    TensorMap lhs = embed_operator(tl, sh, TensorSpace()) *
                    embed_operator(tr, TensorSpace(), TensorSpace({H, B})) *
                    swap * dd;
    TensorMap blockswap =
        flip_map(TensorSpace({H, B}), TensorSpace({H, B}));
    TensorMap rhs = embed_operator(tl, sh, TensorSpace()) *
                    embed_operator(tr, TensorSpace(), TensorSpace({H, B})) *
                    blockswap * swap * dd;
    rep.check_equal("(m3) h1 <| b1 (x) h2 |> b2 = h2 <| b2 (x) h1 |> b1", "",
                    lhs, rhs);
  }
  return rep;
}

CheckReport check_inverse_antipode_identities(const MatchedPair& p) {
  CheckReport rep("inverse-antipode identities (m4), (m5) for " + p.name);
  const AlgebraPtr& B = p.B.alg();
  const AlgebraPtr& H = p.H.alg();
  TensorSpace sb({B}), sh({H});
  const TensorMap& tl = p.act_left;
  const TensorMap& tr = p.act_right;
  TensorMap sbinv(sb, sb, p.B.antipode_inv());
  TensorMap shinv(sh, sh, p.H.antipode_inv());

  {
    TensorMap lhs = sbinv * tl;
    TensorMap step1 = embed_operator(p.B.coproduct(), sh, TensorSpace());
    TensorMap sinv2 = embed_operator(sbinv, sh, sb);  // S_B^-1 on b1
    TensorMap swap = embed_operator(flip_map(sb, sb), sh, TensorSpace());
    TensorMap a1 = embed_operator(tr, TensorSpace(), sb);
    TensorMap rhs = tl * a1 * swap * sinv2 * step1;
    rep.check_equal("(m4) S_B^-1(h |> b) = (h <| b2) |> S_B^-1(b1)", "", lhs,
                    rhs);
  }
  {
    TensorMap lhs = shinv * tr;
    TensorMap step1 = embed_operator(p.H.coproduct(), TensorSpace(), sb);
    TensorMap sinv2 = embed_operator(shinv, sh, sb);  // S_H^-1 on h2
    TensorMap swap = embed_operator(flip_map(sh, sh), TensorSpace(), sb);
    TensorMap a1 = embed_operator(tl, sh, TensorSpace());
    TensorMap rhs = tr * a1 * swap * sinv2 * step1;
    rep.check_equal("(m5) S_H^-1(h <| b) = S_H^-1(h2) <| (h1 |> b)", "", lhs,
                    rhs);
  }
  return rep;
}

DoubleCrossproduct build_double_crossproduct(const MatchedPair& p) {
  CheckReport mp = check_matched_pair(p);
  if (!mp.all_pass()) throw NotMatched(mp.summary());

  const AlgebraPtr& B = p.B.alg();
  const AlgebraPtr& H = p.H.alg();
  Index db = B->dim(), dh = H->dim();
  Index dim = db * dh;
  TensorSpace sb({B}), sh({H});

  // multiplication (B,H,B,H) -> (B,H):
  // (b(x)h)(c(x)g) = b (h1 |> c1) (x) (h2 <| c2) g
  TensorMap mul_map = [&] {
    TensorMap s1 = embed_operator(p.H.coproduct(), sb, TensorSpace({B, H}));
    TensorMap s2 = embed_operator(p.B.coproduct(), TensorSpace({B, H, H}), sh);
    TensorMap perm = embed_operator(flip_map(sh, sb), TensorSpace({B, H}),
                                    TensorSpace({B, H}));
    TensorMap a1 =
        embed_operator(p.act_left, sb, TensorSpace({H, B, H}));
    TensorMap a2 = embed_operator(p.act_right, TensorSpace({B, B}), sh);
    TensorMap m1 = face_multiply(TensorSpace({B, B, H, H}), 0);
    TensorMap m2 = face_multiply(TensorSpace({B, H, H}), 1);
    return m2 * m1 * a2 * a1 * perm * s2 * s1;
  }();

  std::vector<std::string> labels(dim);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < dh; ++j)
      labels[i * dh + j] = B->label(i) + "." + H->label(j);
  SparseVec unit;
  for (const auto& eb : B->unit())
    for (const auto& eh : H->unit())
      unit.push_back({eb.row * dh + eh.row, eb.val * eh.val});
  std::sort(unit.begin(), unit.end(),
            [](const Entry& x, const Entry& y) { return x.row < y.row; });
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (Index x = 0; x < dim; ++x)
    for (Index y = 0; y < dim; ++y)
      mult[static_cast<std::size_t>(x) * dim + y] =
          mul_map.mat.col(x * dim + y);
  auto alg = std::make_shared<FinDimAlgebra>(
      p.B.alg()->name() + "><" + p.H.alg()->name(), std::move(labels),
      std::move(unit), std::move(mult));
  TensorSpace sd({alg});

  // coproduct: (b1 (x) h1) (x) (b2 (x) h2)
  TensorMap cop = [&] {
    TensorMap s1 = embed_operator(p.B.coproduct(), TensorSpace(), sh);
    TensorMap s2 = embed_operator(p.H.coproduct(), TensorSpace({B, B}),
                                  TensorSpace());
    TensorMap perm = embed_operator(flip_map(sb, sh), sb, sh);
    TensorMap pipeline = perm * s2 * s1;  // (B,H) -> (B,H,B,H)
    return pipeline.with_spaces(sd, TensorSpace({alg, alg}));
  }();
  TensorMap cou = [&] {
    TensorMap pipeline =
        p.H.counit() * embed_operator(p.B.counit(), TensorSpace(), sh);
    return pipeline.with_spaces(sd, TensorSpace());
  }();

  // antipode: S(b (x) h) = (1 (x) S_H h)(S_B b (x) 1)
  SparseMatrix anti(dim, dim);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < dh; ++j) {
      SparseVec v1;  // 1_B (x) S_H(e_j)
      for (const auto& eb : B->unit())
        for (const auto& es : p.H.antipode().col(j))
          sparse_axpy(v1, eb.val * es.val, sparse_unit(eb.row * dh + es.row));
      SparseVec v2;  // S_B(e_i) (x) 1_H
      for (const auto& es : p.B.antipode().col(i))
        for (const auto& eh : H->unit())
          sparse_axpy(v2, es.val * eh.val, sparse_unit(es.row * dh + eh.row));
      anti.set_col(i * dh + j, alg->multiply(v1, v2));
    }
  HopfAlgebra hopf(alg, std::move(cop), std::move(cou), std::move(anti));

  // R(h (x) b) = (h1 |> b1) (x) (h2 <| b2)
  TensorMap rmap_fwd = [&] {
    TensorMap dd = embed_operator(p.B.coproduct(), TensorSpace({H, H}),
                                  TensorSpace()) *
                   embed_operator(p.H.coproduct(), TensorSpace(), sb);
    TensorMap swap = embed_operator(flip_map(sh, sb), sh, sb);
    TensorMap acts = embed_operator(p.act_right, sb, TensorSpace()) *
                     embed_operator(p.act_left, TensorSpace(),
                                    TensorSpace({H, B}));
    return acts * swap * dd;
  }();

  // r(b (x) h) = h3 <| (S_H^-1(h2) |> S_B^-1(b3))
  //              (x) (S_H^-1(h1) <| S_B^-1(b2)) |> b1
  TensorMap r_formula = [&] {
    TensorMap sbinv(sb, sb, p.B.antipode_inv());
    TensorMap shinv(sh, sh, p.H.antipode_inv());
    TensorMap d2b = embed_operator(p.B.delta_power(2), TensorSpace(), sh);
    TensorMap d2h = embed_operator(p.H.delta_power(2),
                                   TensorSpace({B, B, B}), TensorSpace());
    // factors now (b1, b2, b3, h1, h2, h3)
    TensorMap sb2 = embed_operator(sbinv, sb, TensorSpace({B, H, H, H}));
    TensorMap sb3 = embed_operator(sbinv, TensorSpace({B, B}),
                                   TensorSpace({H, H, H}));
    TensorMap sh1 = embed_operator(shinv, TensorSpace({B, B, B}),
                                   TensorSpace({H, H}));
    TensorMap sh2 = embed_operator(shinv, TensorSpace({B, B, B, H}), sh);
    // rearrange (b1, Sb2, Sb3, Sh1, Sh2, h3) -> (h3, Sh2, Sb3, Sh1, Sb2, b1)
    TensorMap perm = permute_factors(TensorSpace({B, B, B, H, H, H}),
                                     {5, 4, 2, 3, 1, 0});
    TensorMap a1 = embed_operator(p.act_left, sh, TensorSpace({H, B, B}));
    TensorMap a2 =
        embed_operator(p.act_right, TensorSpace(), TensorSpace({H, B, B}));
    TensorMap a3 = embed_operator(p.act_right, sh, sb);
    TensorMap a4 = embed_operator(p.act_left, sh, TensorSpace());
    return a4 * a3 * a2 * a1 * perm * sh2 * sh1 * sb3 * sb2 * d2h * d2b;
  }();

  RMap rm = RMap::from_maps(B, H, rmap_fwd, r_formula);
  return DoubleCrossproduct{p, std::move(hopf), std::move(rm)};
}

MatchedPair drinfeld_double_pair(const HopfAlgebra& h, const std::string& name) {
  HopfAlgebra dual = dual_cop(h);
  const AlgebraPtr& H = h.alg();
  const AlgebraPtr& B = dual.alg();
  Index d = H->dim();
  TensorSpace src({H, B});

  // (h |> f)(x) = f(S^-1(h_(2)) x h_(1)),  h <| f = f(S^-1(h_(3)) h_(1)) h_(2)
  SparseMatrix left(d, src.dim32());
  SparseMatrix right(d, src.dim32());
  TensorMap delta2 = h.delta_power(2);
  for (Index a = 0; a < d; ++a) {
    const SparseVec& d1 = h.coproduct().mat.col(a);  // pairs (p, q)
    const SparseVec& d2 = delta2.mat.col(a);         // triples (p, q, r)
    for (Index b = 0; b < d; ++b) {
      SparseVec lcol, rcol;
      for (const auto& e : d1) {
        Index pp = e.row / d, qq = e.row % d;
        // f_b(S^-1(e_q) e_x e_p) for each x
        for (Index x = 0; x < d; ++x) {
          SparseVec w = H->multiply(h.antipode_inv().col(qq), sparse_unit(x));
          w = H->multiply(w, sparse_unit(pp));
          for (const auto& we : w)
            if (we.row == b) sparse_axpy(lcol, e.val * we.val, sparse_unit(x));
        }
      }
      for (const auto& e : d2) {
        Index pp = e.row / (d * d), qq = (e.row / d) % d, rr = e.row % d;
        SparseVec w = H->multiply(h.antipode_inv().col(rr), sparse_unit(pp));
        for (const auto& we : w)
          if (we.row == b) sparse_axpy(rcol, e.val * we.val, sparse_unit(qq));
      }
      left.set_col(a * d + b, lcol);
      right.set_col(a * d + b, rcol);
    }
  }
  TensorMap act_left(src, TensorSpace({B}), std::move(left));
  TensorMap act_right(src, TensorSpace({H}), std::move(right));
  return MatchedPair{std::move(dual), h, std::move(act_left),
                     std::move(act_right), name};
}

}  // namespace smashhc
