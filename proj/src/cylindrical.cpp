#include "smashhc/cylindrical.hpp"

#include <sstream>

namespace smashhc {

namespace {

std::string cell_loc(std::size_t p, std::size_t q) {
  return "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

CylindricalModule::CylindricalModule(SmashAlgebra smash)
    : smash_(std::move(smash)), sa_(smash_.algebra()) {}

Index CylindricalModule::dim(std::size_t p, std::size_t q) const {
  return cell(p, q).space.dim32();
}

const CylindricalModule::Cell& CylindricalModule::cell(std::size_t p,
                                                       std::size_t q) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(p, q);
  auto it = cells_.find(key);
  if (it == cells_.end())
    it = cells_.emplace(key, std::make_unique<Cell>(build_cell(p, q))).first;
  return *it->second;
}

CylindricalModule::Cell CylindricalModule::build_cell(std::size_t p,
                                                      std::size_t q) const {
  const RMap& r = smash_.rmap();
  const AlgebraPtr& A = smash_.A();
  const AlgebraPtr& B = smash_.B();
  auto theta_at = [&](std::size_t qq) -> const TensorMap& {
    auto it = theta_.find(qq);
    if (it == theta_.end()) it = theta_.emplace(qq, r.theta(qq)).first;
    return it->second;
  };
  auto theta_inv_at = [&](std::size_t qq) -> const TensorMap& {
    auto it = theta_inv_.find(qq);
    if (it == theta_inv_.end())
      it = theta_inv_.emplace(qq, r.theta_inv(qq)).first;
    return it->second;
  };
  auto gamma_at = [&](std::size_t pp) -> const TensorMap& {
    auto it = gamma_.find(pp);
    if (it == gamma_.end()) it = gamma_.emplace(pp, r.gamma(pp)).first;
    return it->second;
  };
  auto gamma_inv_at = [&](std::size_t pp) -> const TensorMap& {
    auto it = gamma_inv_.find(pp);
    if (it == gamma_inv_.end())
      it = gamma_inv_.emplace(pp, r.gamma_inv(pp)).first;
    return it->second;
  };

  Cell c;
  std::vector<AlgebraPtr> factors;
  for (std::size_t i = 0; i <= p; ++i) factors.push_back(B);
  for (std::size_t j = 0; j <= q; ++j) factors.push_back(A);
  c.space = TensorSpace(std::move(factors));

  TensorSpace bp = TensorSpace::power(B, p);          // B^{(x)p}
  TensorSpace aq = TensorSpace::power(A, q);          // A^{(x)q}
  TensorSpace sb({B}), sa_space({A});

  // t = f^{p+q+1,1} (id^p (x) Theta_q); t^-1 = (id^p (x) Theta_q^-1) f^{1,p+q+1}
  {
    TensorMap th = embed_operator(theta_at(q), bp, TensorSpace());
    TensorMap fl = flip_map(
        TensorSpace::concat(bp, TensorSpace::concat(
                                    TensorSpace::power(A, q + 1), TensorSpace())),
        sb);
    c.t = (fl * th).mat;
    TensorMap fl_inv =
        flip_map(sb, TensorSpace::concat(bp, TensorSpace::power(A, q + 1)));
    TensorMap th_inv = embed_operator(theta_inv_at(q), bp, TensorSpace());
    c.t_inv = (th_inv * fl_inv).mat;
  }
  // t-bar = (Gamma_p (x) id^q) f^{p+q+1,1}; inverse reversed
  {
    TensorMap fl = flip_map(
        TensorSpace::concat(TensorSpace::power(B, p + 1), aq), sa_space);
    TensorMap ga = embed_operator(gamma_at(p), TensorSpace(), aq);
    c.bt = (ga * fl).mat;
    TensorMap ga_inv = embed_operator(gamma_inv_at(p), TensorSpace(), aq);
    TensorMap fl_inv = flip_map(
        sa_space, TensorSpace::concat(TensorSpace::power(B, p + 1), aq));
    c.bt_inv = (fl_inv * ga_inv).mat;
  }
  // faces and degeneracies
  if (p >= 1) {
    c.face.resize(p + 1);
    for (std::size_t i = 0; i < p; ++i)
      c.face[i] = face_multiply(c.space, i).mat;
    c.face[p] = c.face[0] * c.t;
  }
  c.degen.resize(p + 1);
  for (std::size_t i = 0; i <= p; ++i)
    c.degen[i] = insert_unit(c.space, i + 1, B).mat;
  if (q >= 1) {
    c.bface.resize(q + 1);
    for (std::size_t j = 0; j < q; ++j)
      c.bface[j] = face_multiply(c.space, p + 1 + j).mat;
    c.bface[q] = c.bface[0] * c.bt;
  }
  c.bdegen.resize(q + 1);
  for (std::size_t j = 0; j <= q; ++j)
    c.bdegen[j] = insert_unit(c.space, p + 1 + j + 1, A).mat;
  return c;
}

ParacyclicModule CylindricalModule::row_module(std::size_t q,
                                               std::size_t pmax) const {
  std::vector<PLevel> levels(pmax + 1);
  for (std::size_t p = 0; p <= pmax; ++p) {
    const Cell& c = cell(p, q);
    PLevel& lv = levels[p];
    lv.dim = c.space.dim32();
    lv.space = c.space;
    lv.face = c.face;
    lv.degen = c.degen;
    lv.t = c.t;
    lv.t_inv = c.t_inv;
  }
  return ParacyclicModule::from_direct(
      "row q=" + std::to_string(q) + " of " + sa_->name() + "-natural",
      std::move(levels));
}

ParacyclicModule CylindricalModule::col_module(std::size_t p,
                                               std::size_t qmax) const {
  std::vector<PLevel> levels(qmax + 1);
  for (std::size_t q = 0; q <= qmax; ++q) {
    const Cell& c = cell(p, q);
    PLevel& lv = levels[q];
    lv.dim = c.space.dim32();
    lv.space = c.space;
    lv.face = c.bface;
    lv.degen = c.bdegen;
    lv.t = c.bt;
    lv.t_inv = c.bt_inv;
  }
  return ParacyclicModule::from_direct(
      "column p=" + std::to_string(p) + " of " + sa_->name() + "-natural",
      std::move(levels));
}

SparseMatrix CylindricalModule::row_b(std::size_t p, std::size_t q) const {
  const Cell& c = cell(p, q);
  SparseMatrix acc(dim(p - 1, q), c.space.dim32());
  Scalar sign(1);
  for (std::size_t i = 0; i <= p; ++i) {
    acc = acc + c.face[i].scaled(sign);
    sign = -sign;
  }
  return acc;
}

SparseMatrix CylindricalModule::col_b(std::size_t p, std::size_t q) const {
  const Cell& c = cell(p, q);
  SparseMatrix acc(dim(p, q - 1), c.space.dim32());
  Scalar sign(1);
  for (std::size_t j = 0; j <= q; ++j) {
    acc = acc + c.bface[j].scaled(sign);
    sign = -sign;
  }
  return acc;
}

SparseMatrix CylindricalModule::row_extra(std::size_t p, std::size_t q) const {
  // s_{-1} = t^{-1} s_0 t on the row direction
  return cell(p + 1, q).t_inv * cell(p, q).degen[0] * cell(p, q).t;
}

SparseMatrix CylindricalModule::col_extra(std::size_t p, std::size_t q) const {
  return cell(p, q + 1).bt_inv * cell(p, q).bdegen[0] * cell(p, q).bt;
}

SparseMatrix CylindricalModule::row_big_t(std::size_t p, std::size_t q) const {
  return cell(p, q).t.pow(static_cast<long long>(p) + 1);
}

SparseMatrix CylindricalModule::col_big_t(std::size_t p, std::size_t q) const {
  return cell(p, q).bt.pow(static_cast<long long>(q) + 1);
}

SparseMatrix CylindricalModule::row_big_b(std::size_t p, std::size_t q) const {
  const Cell& c = cell(p, q);
  // N in the row direction
  SparseMatrix norm = SparseMatrix::identity(c.space.dim32());
  SparseMatrix tp = SparseMatrix::identity(c.space.dim32());
  for (std::size_t i = 1; i <= p; ++i) {
    tp = c.t * tp;
    norm = norm + (p % 2 == 1 && i % 2 == 1 ? tp.scaled(Scalar(-1)) : tp);
  }
  const SparseMatrix& tnext = cell(p + 1, q).t;
  SparseMatrix pre = SparseMatrix::identity(tnext.rows());
  pre = p % 2 == 0 ? pre + tnext : pre - tnext;
  return pre * row_extra(p, q) * norm;
}

SparseMatrix CylindricalModule::col_big_b(std::size_t p, std::size_t q) const {
  const Cell& c = cell(p, q);
  SparseMatrix norm = SparseMatrix::identity(c.space.dim32());
  SparseMatrix tp = SparseMatrix::identity(c.space.dim32());
  for (std::size_t j = 1; j <= q; ++j) {
    tp = c.bt * tp;
    norm = norm + (q % 2 == 1 && j % 2 == 1 ? tp.scaled(Scalar(-1)) : tp);
  }
  const SparseMatrix& tnext = cell(p, q + 1).bt;
  SparseMatrix pre = SparseMatrix::identity(tnext.rows());
  pre = q % 2 == 0 ? pre + tnext : pre - tnext;
  return pre * col_extra(p, q) * norm;
}

const Subquotient& CylindricalModule::normalized_cell(std::size_t p,
                                                      std::size_t q) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = normalized_.find({p, q});
    if (it != normalized_.end()) return *it->second;
  }
  Index d = dim(p, q);
  SparseMatrix gens(d, 0);
  if (p >= 1)
    for (const auto& s : cell(p - 1, q).degen) gens = gens.hstack(s);
  if (q >= 1)
    for (const auto& s : cell(p, q - 1).bdegen) gens = gens.hstack(s);
  auto sq = std::make_unique<Subquotient>(
      Subquotient::full_mod(d, image_basis(gens)));
  std::lock_guard<std::mutex> lock(mu_);
  auto it = normalized_.find({p, q});
  if (it == normalized_.end())
    it = normalized_.emplace(std::make_pair(p, q), std::move(sq)).first;
  return *it->second;
}

SparseMatrix CylindricalModule::norm_row_b(std::size_t p, std::size_t q) const {
  return induced_map(row_b(p, q), normalized_cell(p, q),
                     normalized_cell(p - 1, q));
}

SparseMatrix CylindricalModule::norm_col_b(std::size_t p, std::size_t q) const {
  return induced_map(col_b(p, q), normalized_cell(p, q),
                     normalized_cell(p, q - 1));
}

SparseMatrix CylindricalModule::norm_row_big_b(std::size_t p,
                                               std::size_t q) const {
  return induced_map(row_big_b(p, q), normalized_cell(p, q),
                     normalized_cell(p + 1, q));
}

SparseMatrix CylindricalModule::norm_col_big_b(std::size_t p,
                                               std::size_t q) const {
  return induced_map(col_big_b(p, q), normalized_cell(p, q),
                     normalized_cell(p, q + 1));
}

SparseMatrix CylindricalModule::norm_row_big_t(std::size_t p,
                                               std::size_t q) const {
  return induced_map(row_big_t(p, q), normalized_cell(p, q),
                     normalized_cell(p, q));
}

CheckReport CylindricalModule::certify(std::size_t p_bound,
                                       std::size_t q_bound) const {
  CheckReport rep("cylindrical certification for " + sa_->name() +
                  "-natural, bounds (" + std::to_string(p_bound) + "," +
                  std::to_string(q_bound) + ")");
  // rows and columns are paracyclic
  for (std::size_t q = 0; q <= q_bound; ++q)
    rep.merge(row_module(q, p_bound).check_axioms(/*cyclic_mode=*/false));
  for (std::size_t p = 0; p <= p_bound; ++p)
    rep.merge(col_module(p, q_bound).check_axioms(/*cyclic_mode=*/false));

  // commutation of every barred/unbarred operator pair
  for (std::size_t p = 0; p <= p_bound; ++p)
    for (std::size_t q = 0; q <= q_bound; ++q) {
      const Cell& c = cell(p, q);
      auto lab = [&](std::size_t idx) { return c.space.label(idx); };
      std::string loc = cell_loc(p, q);
      // t with t-bar
      rep.check_equal("t t-bar = t-bar t", loc, cell(p, q).t * c.bt,
                      c.bt * c.t, lab);
      for (std::size_t j = 0; j <= q && q >= 1; ++j) {
        rep.check_equal("t d-bar" + std::to_string(j) + " commute", loc,
                        cell(p, q - 1).t * c.bface[j], c.bface[j] * c.t, lab);
      }
      for (std::size_t j = 0; j <= q; ++j)
        rep.check_equal("t s-bar" + std::to_string(j) + " commute", loc,
                        cell(p, q + 1).t * c.bdegen[j], c.bdegen[j] * c.t,
                        lab);
      for (std::size_t i = 0; i <= p && p >= 1; ++i) {
        rep.check_equal("t-bar d" + std::to_string(i) + " commute", loc,
                        cell(p - 1, q).bt * c.face[i], c.face[i] * c.bt, lab);
        for (std::size_t j = 0; j <= q && q >= 1; ++j)
          rep.check_equal(
              "d" + std::to_string(i) + " d-bar" + std::to_string(j) +
                  " commute",
              loc, cell(p - 1, q).bface[j] * c.face[i],
              cell(p, q - 1).face[i] * c.bface[j], lab);
        for (std::size_t j = 0; j <= q; ++j)
          rep.check_equal(
              "d" + std::to_string(i) + " s-bar" + std::to_string(j) +
                  " commute",
              loc, cell(p - 1, q).bdegen[j] * c.face[i],
              cell(p, q + 1).face[i] * c.bdegen[j], lab);
      }
      for (std::size_t i = 0; i <= p; ++i) {
        rep.check_equal("t-bar s" + std::to_string(i) + " commute", loc,
                        cell(p + 1, q).bt * c.degen[i], c.degen[i] * c.bt,
                        lab);
        for (std::size_t j = 0; j <= q && q >= 1; ++j)
          rep.check_equal(
              "s" + std::to_string(i) + " d-bar" + std::to_string(j) +
                  " commute",
              loc, cell(p + 1, q).bface[j] * c.degen[i],
              cell(p, q - 1).degen[i] * c.bface[j], lab);
        for (std::size_t j = 0; j <= q; ++j)
          rep.check_equal(
              "s" + std::to_string(i) + " s-bar" + std::to_string(j) +
                  " commute",
              loc, cell(p + 1, q).bdegen[j] * c.degen[i],
              cell(p, q + 1).degen[i] * c.bdegen[j], lab);
      }
      // cylindrical condition
      rep.check_equal("t^{p+1} t-bar^{q+1} = id", loc,
                      row_big_t(p, q) * col_big_t(p, q),
                      SparseMatrix::identity(c.space.dim32()), lab);
    }
  return rep;
}

CheckReport CylindricalModule::check_cross_anticommutation(
    std::size_t p_bound, std::size_t q_bound) const {
  CheckReport rep("cross-direction anticommutation for " + sa_->name() +
                  "-natural");
  for (std::size_t p = 0; p <= p_bound; ++p)
    for (std::size_t q = 1; q <= q_bound; ++q) {
      std::string loc = cell_loc(p, q);
      // b-bar B = -B b-bar with the twist: the barred b at (p, q) carries
      // (-1)^p, at (p+1, q) carries (-1)^{p+1}
      SparseMatrix lhs =
          col_b(p + 1, q).scaled(Scalar(p % 2 == 0 ? -1 : 1)) * row_big_b(p, q);
      SparseMatrix rhs =
          (row_big_b(p, q - 1) * col_b(p, q).scaled(Scalar(p % 2 == 0 ? 1 : -1)))
              .scaled(Scalar(-1));
      rep.check_equal("b-bar B = -B b-bar", loc, lhs, rhs);
    }
  for (std::size_t p = 1; p <= p_bound; ++p)
    for (std::size_t q = 0; q <= q_bound; ++q) {
      std::string loc = cell_loc(p, q);
      // B-bar b = -b B-bar, twisted barred B
      SparseMatrix lhs = col_big_b(p - 1, q).scaled(
                             Scalar((p - 1) % 2 == 0 ? 1 : -1)) *
                         row_b(p, q);
      SparseMatrix rhs =
          (row_b(p, q + 1) * col_big_b(p, q).scaled(Scalar(p % 2 == 0 ? 1 : -1)))
              .scaled(Scalar(-1));
      rep.check_equal("B-bar b = -b B-bar", loc, lhs, rhs);
    }
  return rep;
}

ParacyclicModule CylindricalModule::diagonal(std::size_t n_max) const {
  std::vector<PLevel> levels(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Cell& c = cell(n, n);
    PLevel& lv = levels[n];
    lv.dim = c.space.dim32();
    lv.space = c.space;
    lv.t = c.t * c.bt;
    lv.t_inv = c.bt_inv * c.t_inv;
    if (n >= 1) {
      lv.face.resize(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        lv.face[i] = cell(n, n - 1).face[i] * c.bface[i];
    }
    lv.degen.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      lv.degen[i] = cell(n, n + 1).degen[i] * c.bdegen[i];
  }
  return ParacyclicModule::from_direct("Delta(" + sa_->name() + "-natural)",
                                       std::move(levels));
}

ParacyclicModule CylindricalModule::smash_cyclic(std::size_t n_max) const {
  return algebra_cyclic_module(sa_, n_max);
}

TensorMap CylindricalModule::phi(std::size_t n) const {
  TensorMap acc = TensorMap::identity(cell(n, n).space);
  const TensorMap& r = smash_.rmap().forward();
  for (std::size_t g = 1; g <= n + 1; ++g) {
    for (std::size_t k = n + g; k + 1 >= 2 * g && k + 1 >= 1; --k) {
      // R at 1-indexed slots (k, k+1) of the current arrangement
      std::vector<AlgebraPtr> cur = acc.target.factors();
      TensorSpace left(std::vector<AlgebraPtr>(cur.begin(), cur.begin() + k - 1));
      TensorSpace right(std::vector<AlgebraPtr>(cur.begin() + k + 1, cur.end()));
      acc = embed_operator(r, left, right) * acc;
      if (k + 1 == 2 * g) break;  // unsigned guard
    }
  }
  TensorSpace target = TensorSpace::power(sa_, n + 1);
  return acc.with_spaces(cell(n, n).space, target);
}

TensorMap CylindricalModule::psi(std::size_t n) const {
  // source: (A (x) B)^{(x)(n+1)} read as C_n(A#B)
  std::vector<AlgebraPtr> alt;
  for (std::size_t i = 0; i <= n; ++i) {
    alt.push_back(smash_.A());
    alt.push_back(smash_.B());
  }
  TensorMap acc = TensorMap::identity(TensorSpace(std::move(alt)));
  const TensorMap& rinv = smash_.rmap().inverse();
  for (std::size_t g = 1; g <= n + 1; ++g) {
    for (std::size_t k = 2 * (n + 1) - g; k >= g; k -= 2) {
      std::vector<AlgebraPtr> cur = acc.target.factors();
      TensorSpace left(std::vector<AlgebraPtr>(cur.begin(), cur.begin() + k - 1));
      TensorSpace right(std::vector<AlgebraPtr>(cur.begin() + k + 1, cur.end()));
      acc = embed_operator(rinv, left, right) * acc;
      if (k < g + 2) break;  // unsigned guard
    }
  }
  return acc.with_spaces(TensorSpace::power(sa_, n + 1), cell(n, n).space);
}

CheckReport CylindricalModule::check_phi_psi(std::size_t n_max) const {
  CheckReport rep("Phi/Psi comparison for " + sa_->name());
  ParacyclicModule diag = diagonal(n_max);
  ParacyclicModule cn = smash_cyclic(n_max);
  std::vector<TensorMap> phis;
  for (std::size_t n = 0; n <= n_max; ++n) phis.push_back(phi(n));
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::string loc = "n=" + std::to_string(n);
    auto lab_d = [&](std::size_t idx) { return diag.label(n, idx); };
    auto lab_c = [&](std::size_t idx) { return cn.label(n, idx); };
    TensorMap ps = psi(n);
    rep.check_equal("Phi Psi = id", loc, (phis[n].mat * ps.mat),
                    SparseMatrix::identity(cn.dim(n)), lab_c);
    rep.check_equal("Psi Phi = id", loc, (ps.mat * phis[n].mat),
                    SparseMatrix::identity(diag.dim(n)), lab_d);
    rep.check_equal("Phi t_Delta = t Phi", loc, cn.t(n) * phis[n].mat,
                    phis[n].mat * diag.t(n), lab_d);
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i)
        rep.check_equal("d" + std::to_string(i) + " Phi = Phi d_Delta", loc,
                        cn.face(n, i) * phis[n].mat,
                        phis[n - 1].mat * diag.face(n, i), lab_d);
    if (n + 1 <= n_max)
      for (std::size_t i = 0; i <= n; ++i)
        rep.check_equal("s" + std::to_string(i) + " Phi = Phi s_Delta", loc,
                        cn.degen(n, i) * phis[n].mat,
                        phis[n + 1].mat * diag.degen(n, i), lab_d);
  }
  return rep;
}

TotalMixedComplex CylindricalModule::total_mixed(std::size_t n_max) const {
  TotalMixedComplex tot;
  tot.cells.resize(n_max + 1);
  tot.offsets.resize(n_max + 1);
  MixedComplex& mc = tot.mixed;
  mc.name = "Tot(" + sa_->name() + "-natural)";
  mc.bound = n_max;
  mc.dims.resize(n_max + 1);
  mc.small.resize(n_max + 1);
  mc.big.resize(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Index off = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      tot.cells[n].push_back({i, n - i});
      tot.offsets[n].push_back(off);
      off += normalized_cell(i, n - i).dim();
    }
    tot.offsets[n].push_back(off);
    mc.dims[n] = off;
  }
  auto add_block = [](SparseMatrix& d, const SparseMatrix& block, Index toff,
                      Index soff) {
    for (Index c = 0; c < block.cols(); ++c)
      for (const auto& e : block.col(c))
        d.set(toff + e.row, soff + c, d.get(toff + e.row, soff + c) + e.val);
  };
  // small differential: b + (-1)^i b-bar on normalized cells
  for (std::size_t n = 1; n <= n_max; ++n) {
    SparseMatrix d(mc.dims[n - 1], mc.dims[n]);
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t j = n - i;
      Index soff = tot.offsets[n][i];
      if (i >= 1)
        add_block(d, norm_row_b(i, j), tot.offsets[n - 1][i - 1], soff);
      if (j >= 1)
        add_block(d, norm_col_b(i, j).scaled(Scalar(i % 2 == 0 ? 1 : -1)),
                  tot.offsets[n - 1][i], soff);
    }
    mc.small[n] = std::move(d);
  }
  // big differential: B + T (twisted B-bar) on normalized cells
  for (std::size_t n = 0; n + 1 <= n_max; ++n) {
    SparseMatrix d(mc.dims[n + 1], mc.dims[n]);
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t j = n - i;
      Index soff = tot.offsets[n][i];
      add_block(d, norm_row_big_b(i, j), tot.offsets[n + 1][i + 1], soff);
      SparseMatrix tb = induced_map(row_big_t(i, j + 1) * col_big_b(i, j),
                                    normalized_cell(i, j),
                                    normalized_cell(i, j + 1));
      add_block(d, tb.scaled(Scalar(i % 2 == 0 ? 1 : -1)),
                tot.offsets[n + 1][i], soff);
    }
    mc.big[n] = std::move(d);
  }
  CheckReport rep = mc.check();
  if (!rep.all_pass())
    throw AxiomViolation("total mixed complex identities fail:\n" +
                         rep.summary());
  return tot;
}

}  // namespace smashhc
