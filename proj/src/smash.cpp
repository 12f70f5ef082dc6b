#include "smashhc/smash.hpp"

#include <algorithm>

#include "smashhc/hopf.hpp"

namespace smashhc {

RMap::RMap(AlgebraPtr a, AlgebraPtr b, TensorMap fwd, TensorMap inv)
    : a_(std::move(a)),
      b_(std::move(b)),
      forward_(std::move(fwd)),
      inverse_(std::move(inv)) {}

RMap RMap::from_matrix(AlgebraPtr a, AlgebraPtr b, SparseMatrix forward) {
  TensorSpace ba({b, a}), ab({a, b});
  TensorMap fwd(ba, ab, std::move(forward));
  SparseMatrix invm;
  try {
    invm = fwd.mat.inverse();
  } catch (const NotInvertible&) {
    throw NotInvertible("R is singular: rank " + std::to_string(rank(fwd.mat)) +
                        " < " + std::to_string(fwd.mat.rows()));
  }
  TensorMap inv(ab, ba, std::move(invm));
  return RMap(std::move(a), std::move(b), std::move(fwd), std::move(inv));
}

RMap RMap::from_maps(AlgebraPtr a, AlgebraPtr b, TensorMap forward,
                     TensorMap inverse) {
  if (!(forward.mat * inverse.mat).is_identity() ||
      !(inverse.mat * forward.mat).is_identity())
    throw NotInvertible("supplied inverse does not invert R");
  return RMap(std::move(a), std::move(b), std::move(forward),
              std::move(inverse));
}

RMap RMap::make_flip(AlgebraPtr a, AlgebraPtr b) {
  TensorSpace sa({a}), sb({b});
  TensorMap fwd = flip_map(sb, sa);
  TensorMap inv = flip_map(sa, sb);
  return RMap(std::move(a), std::move(b), std::move(fwd), std::move(inv));
}

CheckReport RMap::check() const {
  CheckReport rep("R-map " + b_->name() + "(x)" + a_->name() + " -> " +
                  a_->name() + "(x)" + b_->name());
  TensorSpace sa({a_}), sb({b_});
  TensorSpace bba({b_, b_, a_}), baa({b_, a_, a_});

  // R (m_B (x) id) = (id (x) m_B) R12 R23 on B(x)B(x)A
  {
    TensorMap lhs = forward_ * face_multiply(bba, 0);
    TensorMap r23 = embed_operator(forward_, sb, TensorSpace());
    TensorMap r12 = embed_operator(forward_, TensorSpace(), sb);
    TensorMap rhs = face_multiply(r12.target, 1) * r12 * r23;
    rep.check_equal("R(m_B (x) id) = (id (x) m_B) R12 R23", "", lhs, rhs);
  }
  // R (id (x) m_A) = (m_A (x) id) R23 R12 on B(x)A(x)A
  {
    TensorMap lhs = forward_ * face_multiply(baa, 1);
    TensorMap r12 = embed_operator(forward_, TensorSpace(), sa);
    TensorMap r23 = embed_operator(forward_, sa, TensorSpace());
    TensorMap rhs = face_multiply(r23.target, 0) * r23 * r12;
    rep.check_equal("R(id (x) m_A) = (m_A (x) id) R23 R12", "", lhs, rhs);
  }
  // normality
  {
    TensorMap lhs = forward_ * insert_unit(sa, 0, b_);
    TensorMap rhs = insert_unit(sa, 1, b_);
    rep.check_equal("R(1 (x) a) = a (x) 1", "", lhs, rhs);
  }
  {
    TensorMap lhs = forward_ * insert_unit(sb, 1, a_);
    TensorMap rhs = insert_unit(sb, 0, a_);
    rep.check_equal("R(b (x) 1) = 1 (x) b", "", lhs, rhs);
  }
  // invertibility
  rep.check_equal("R R^-1 = id", "", (forward_ * inverse_).mat,
                  SparseMatrix::identity(forward_.mat.rows()));
  rep.check_equal("R^-1 R = id", "", (inverse_ * forward_).mat,
                  SparseMatrix::identity(inverse_.mat.rows()));
  return rep;
}

RMap RMap::swapped() const { return RMap(b_, a_, inverse_, forward_); }

TensorMap RMap::theta(std::size_t q) const {
  TensorMap acc =
      embed_operator(forward_, TensorSpace(), TensorSpace::power(a_, q));
  for (std::size_t k = 1; k <= q; ++k) {
    TensorMap step = embed_operator(forward_, TensorSpace::power(a_, k),
                                    TensorSpace::power(a_, q - k));
    acc = step * acc;
  }
  return acc;
}

TensorMap RMap::theta_inv(std::size_t q) const {
  TensorMap acc =
      embed_operator(inverse_, TensorSpace::power(a_, q), TensorSpace());
  for (std::size_t k = q; k-- > 0;) {
    TensorMap step = embed_operator(inverse_, TensorSpace::power(a_, k),
                                    TensorSpace::power(a_, q - k));
    acc = step * acc;
  }
  return acc;
}

TensorMap RMap::gamma(std::size_t p) const {
  TensorMap acc =
      embed_operator(inverse_, TensorSpace(), TensorSpace::power(b_, p));
  for (std::size_t k = 1; k <= p; ++k) {
    TensorMap step = embed_operator(inverse_, TensorSpace::power(b_, k),
                                    TensorSpace::power(b_, p - k));
    acc = step * acc;
  }
  return acc;
}

TensorMap RMap::gamma_inv(std::size_t p) const {
  TensorMap acc =
      embed_operator(forward_, TensorSpace::power(b_, p), TensorSpace());
  for (std::size_t k = p; k-- > 0;) {
    TensorMap step = embed_operator(forward_, TensorSpace::power(b_, k),
                                    TensorSpace::power(b_, p - k));
    acc = step * acc;
  }
  return acc;
}

CheckReport check_flip_braid(const RMap& r) {
  CheckReport rep("flip-braid relations for " + r.A()->name() + " # " +
                  r.B()->name());
  const AlgebraPtr& A = r.A();
  const AlgebraPtr& B = r.B();
  TensorSpace sa({A}), sb({B});

  struct Op {
    std::string name;
    TensorMap map;  // P (x) Q -> Q (x) P
    AlgebraPtr p, q;
  };
  const Op ops[2] = {{"R", r.forward(), B, A}, {"R^-1", r.inverse(), A, B}};

  for (const Op& op : ops) {
    TensorSpace sp({op.p}), sq({op.q});
    for (const AlgebraPtr& x : {A, B}) {
      TensorSpace sx({x});
      std::string loc = op.name + ", X = " + x->name();
      // f12 f23 R12 = R23 f12 f23 on (P, Q, X)
      {
        TensorMap r12 = embed_operator(op.map, TensorSpace(), sx);
        TensorMap f23 = embed_operator(flip_map(sp, sx), sq, TensorSpace());
        TensorMap f12 = embed_operator(flip_map(sq, sx), TensorSpace(), sp);
        TensorMap lhs = f12 * f23 * r12;
        TensorMap g23 = embed_operator(flip_map(sq, sx), sp, TensorSpace());
        TensorMap g12 = embed_operator(flip_map(sp, sx), TensorSpace(), sq);
        TensorMap r23 = embed_operator(op.map, sx, TensorSpace());
        TensorMap rhs = r23 * g12 * g23;
        rep.check_equal("f12 f23 " + op.name + "12 = " + op.name +
                            "23 f12 f23",
                        loc, lhs, rhs);
      }
      // f12 R23 f12 = f23 R12 f23 on (P, X, Q)
      {
        TensorMap f12a = embed_operator(flip_map(sp, sx), TensorSpace(), sq);
        TensorMap r23 = embed_operator(op.map, sx, TensorSpace());
        TensorMap f12b = embed_operator(flip_map(sx, sq), TensorSpace(), sp);
        TensorMap lhs = f12b * r23 * f12a;
        TensorMap f23a = embed_operator(flip_map(sx, sq), sp, TensorSpace());
        TensorMap r12 = embed_operator(op.map, TensorSpace(), sx);
        TensorMap f23b = embed_operator(flip_map(sp, sx), sq, TensorSpace());
        TensorMap rhs = f23b * r12 * f23a;
        rep.check_equal("f12 " + op.name + "23 f12 = f23 " + op.name +
                            "12 f23",
                        loc, lhs, rhs);
      }
      // R12 f23 f12 = f23 f12 R23 on (X, P, Q)
      {
        TensorMap f12a = embed_operator(flip_map(sx, sp), TensorSpace(), sq);
        TensorMap f23a = embed_operator(flip_map(sx, sq), sp, TensorSpace());
        TensorMap r12 = embed_operator(op.map, TensorSpace(), sx);
        TensorMap lhs = r12 * f23a * f12a;
        TensorMap r23 = embed_operator(op.map, sx, TensorSpace());
        TensorMap f12b = embed_operator(flip_map(sx, sq), TensorSpace(), sp);
        TensorMap f23b = embed_operator(flip_map(sx, sp), sq, TensorSpace());
        TensorMap rhs = f23b * f12b * r23;
        rep.check_equal(op.name + "12 f23 f12 = f23 f12 " + op.name + "23",
                        loc, lhs, rhs);
      }
    }
  }

  // Relation (I) in embedded instances.
  {
    TensorMap rr = embed_operator(r.forward() * r.inverse(), sa, sb);
    rep.check_equal("embedded R R^-1 = id", "", rr.mat,
                    SparseMatrix::identity(rr.mat.rows()));
    TensorMap rrb = embed_operator(r.inverse() * r.forward(), sb, sa);
    rep.check_equal("embedded R^-1 R = id", "", rrb.mat,
                    SparseMatrix::identity(rrb.mat.rows()));
  }
  return rep;
}

SmashAlgebra::SmashAlgebra(RMap r, AlgebraPtr product)
    : r_(std::move(r)), product_(std::move(product)) {}

SmashAlgebra build_smash(const RMap& r, bool skip_rmap_check) {
  if (!skip_rmap_check) {
    CheckReport rep = r.check();
    if (!rep.all_pass())
      throw AxiomViolation("check_rmap failed:\n" + rep.summary());
  }
  const AlgebraPtr& A = r.A();
  const AlgebraPtr& B = r.B();
  Index da = A->dim(), db = B->dim();
  Index dim = da * db;
  std::vector<std::string> labels(dim);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j)
      labels[i * db + j] = A->label(i) + "#" + B->label(j);

  SparseVec unit;
  for (const auto& ea : A->unit())
    for (const auto& eb : B->unit())
      unit.push_back({ea.row * db + eb.row, ea.val * eb.val});
  std::sort(unit.begin(), unit.end(),
            [](const Entry& x, const Entry& y) { return x.row < y.row; });

  // (e_i # f_j)(e_k # f_l) = e_i R(f_j (x) e_k) f_l
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (Index j = 0; j < db; ++j)
    for (Index k = 0; k < da; ++k) {
      const SparseVec& rcol = r.forward().mat.col(j * da + k);
      for (Index i = 0; i < da; ++i)
        for (Index l = 0; l < db; ++l) {
          SparseVec out;
          for (const auto& e : rcol) {
            Index af = e.row / db;
            Index bf = e.row % db;
            const SparseVec& am = A->mult(i, af);
            const SparseVec& bm = B->mult(bf, l);
            for (const auto& ea : am)
              for (const auto& eb : bm)
                sparse_axpy(out, e.val * ea.val * eb.val,
                            sparse_unit(ea.row * db + eb.row));
          }
          mult[static_cast<std::size_t>(i * db + j) * dim + (k * db + l)] =
              std::move(out);
        }
    }
  auto product = std::make_shared<FinDimAlgebra>(
      A->name() + "#" + B->name(), std::move(labels), std::move(unit),
      std::move(mult));
  try {
    product->check();
  } catch (const AxiomViolation& e) {
    throw AxiomViolation(
        std::string("smash product fails algebra axioms (was check_rmap "
                    "skipped?): ") +
        e.what());
  }
  return SmashAlgebra(r, std::move(product));
}

RMap crossed_product_rmap(const HopfAlgebra& h, const TensorMap& action) {
  const AlgebraPtr& H = h.alg();
  if (action.source.arity() != 2 || !action.source.factor(0)->same_as(*H) ||
      action.target.arity() != 1)
    throw DimensionMismatch("action must be a map H (x) A -> A");
  AlgebraPtr A = action.target.factor(0);
  TensorSpace sa({A}), sh({H});

  TensorMap unit_a(TensorSpace(), sa, [&] {
    SparseMatrix m(A->dim(), 1);
    m.set_col(0, A->unit());
    return m;
  }());

  CheckReport rep("module-algebra axioms for " + H->name() + " acting on " +
                  A->name());
  {
    TensorSpace hha({H, H, A});
    TensorMap lhs = action * face_multiply(hha, 0);
    TensorMap inner = embed_operator(action, sh, TensorSpace());
    TensorMap rhs = action * inner;
    rep.check_equal("(hg).a = h.(g.a)", "", lhs, rhs);
  }
  {
    TensorMap lhs = action * insert_unit(sa, 0, H);
    rep.check_equal("1.a = a", "", lhs, TensorMap::identity(sa));
  }
  {
    TensorSpace haa({H, A, A});
    TensorMap lhs = action * face_multiply(haa, 1);
    TensorMap dl =
        embed_operator(h.coproduct(), TensorSpace(), TensorSpace({A, A}));
    TensorMap swap = embed_operator(flip_map(sh, sa), sh, sa);
    TensorMap act1 = embed_operator(action, TensorSpace(), TensorSpace({H, A}));
    TensorMap act2 = embed_operator(action, sa, TensorSpace());
    TensorMap rhs =
        face_multiply(TensorSpace({A, A}), 0) * act2 * act1 * swap * dl;
    rep.check_equal("h.(a a') = (h_(1).a)(h_(2).a')", "", lhs, rhs);
  }
  {
    TensorMap lhs = action * insert_unit(sh, 1, A);
    TensorMap rhs = unit_a * h.counit();
    rep.check_equal("h.1 = eps(h) 1", "", lhs, rhs);
  }
  if (!rep.all_pass()) throw NotModuleAlgebra(rep.summary());

  // R(h (x) a) = (h_(1).a) (x) h_(2)
  TensorMap dl = embed_operator(h.coproduct(), TensorSpace(), sa);
  TensorMap swap = embed_operator(flip_map(sh, sa), sh, TensorSpace());
  TensorMap act = embed_operator(action, TensorSpace(), sh);
  TensorMap fwd = act * swap * dl;

  // R^-1(a (x) h) = h_(2) (x) S^-1(h_(1)).a
  TensorMap dr = embed_operator(h.coproduct(), sa, TensorSpace());
  TensorMap sinv = embed_operator(TensorMap(sh, sh, h.antipode_inv()), sa, sh);
  TensorMap move_a = flip_map(sa, TensorSpace({H, H}));
  TensorMap swap_hs = embed_operator(flip_map(sh, sh), TensorSpace(), sa);
  TensorMap act2 = embed_operator(action, sh, TensorSpace());
  TensorMap inv = act2 * swap_hs * move_a * sinv * dr;

  return RMap::from_maps(A, H, std::move(fwd), std::move(inv));
}

}  // namespace smashhc
