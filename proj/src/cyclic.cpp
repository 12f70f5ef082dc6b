#include "smashhc/cyclic.hpp"

#include <sstream>

#include "smashhc/parallel.hpp"

namespace smashhc {

namespace {

std::string level_loc(std::size_t n) { return "level " + std::to_string(n); }

}  // namespace

CheckReport MixedComplex::check() const {
  CheckReport rep("mixed complex " + name);
  for (std::size_t n = 2; n <= bound; ++n)
    rep.check_equal("b b = 0", level_loc(n), small[n - 1] * small[n],
                    SparseMatrix(dims[n - 2], dims[n]));
  for (std::size_t n = 0; n + 2 <= bound; ++n)
    rep.check_equal("B B = 0", level_loc(n), big[n + 1] * big[n],
                    SparseMatrix(dims[n + 2], dims[n]));
  for (std::size_t n = 1; n + 1 <= bound; ++n)
    rep.check_equal("bB + Bb = 0", level_loc(n),
                    small[n + 1] * big[n] + big[n - 1] * small[n],
                    SparseMatrix(dims[n], dims[n]));
  if (bound >= 1)
    rep.check_equal("bB = 0 at degree 0", level_loc(0), small[1] * big[0],
                    SparseMatrix(dims[0], dims[0]));
  return rep;
}

ParacyclicModule ParacyclicModule::from_direct(std::string name,
                                               std::vector<PLevel> levels) {
  if (levels.empty()) throw DimensionMismatch(name + ": no levels");
  ParacyclicModule m;
  m.name_ = std::move(name);
  m.levels_ = std::move(levels);
  for (std::size_t n = 0; n < m.levels_.size(); ++n) {
    PLevel& lv = m.levels_[n];
    if (lv.face.size() != (n == 0 ? 0 : n + 1))
      throw DimensionMismatch(m.name_ + ": wrong face count at level " +
                              std::to_string(n));
    if (lv.degen.size() != n + 1 && !(n == m.levels_.size() - 1))
      throw DimensionMismatch(m.name_ + ": wrong degeneracy count at level " +
                              std::to_string(n));
    if (lv.t.rows() != lv.dim || lv.t.cols() != lv.dim)
      throw DimensionMismatch(m.name_ + ": t shape mismatch at level " +
                              std::to_string(n));
    if (lv.t_inv.cols() == 0) lv.t_inv = lv.t.inverse();
  }
  // recover extra degeneracies where possible: s_{-1} = t^{-1} s_0 t
  for (std::size_t n = 0; n + 1 < m.levels_.size(); ++n) {
    PLevel& lv = m.levels_[n];
    if (!lv.extra && !lv.degen.empty())
      lv.extra = m.levels_[n + 1].t_inv * lv.degen[0] * lv.t;
  }
  return m;
}

ParacyclicModule ParacyclicModule::from_generators(
    std::string name, std::size_t level_bound,
    const std::function<std::optional<TensorSpace>(std::size_t)>& space_of,
    const std::function<Index(std::size_t)>& dim_of,
    const std::function<SparseMatrix(std::size_t)>& last_face,
    const std::function<SparseMatrix(std::size_t)>& extra_degen) {
  ParacyclicModule m;
  m.name_ = std::move(name);
  m.levels_.resize(level_bound + 1);
  std::vector<SparseMatrix> lf(level_bound + 2);
  for (std::size_t n = 1; n <= level_bound + 1; ++n) lf[n] = last_face(n);
  for (std::size_t n = 0; n <= level_bound; ++n) {
    PLevel& lv = m.levels_[n];
    lv.dim = dim_of(n);
    lv.space = space_of(n);
    lv.extra = extra_degen(n);
    lv.t = lf[n + 1] * *lv.extra;
    try {
      lv.t_inv = lv.t.inverse();
    } catch (const NotInvertible&) {
      throw NotInvertible(m.name_ + ": t is singular at level " +
                          std::to_string(n));
    }
  }
  for (std::size_t n = 1; n <= level_bound; ++n) {
    PLevel& lv = m.levels_[n];
    lv.face.resize(n + 1);
    lv.face[n] = lf[n];
    for (std::size_t i = n; i-- > 0;)
      lv.face[i] = m.levels_[n - 1].t_inv * lv.face[i + 1] * lv.t;
  }
  for (std::size_t n = 0; n <= level_bound; ++n) {
    PLevel& lv = m.levels_[n];
    if (n + 1 > level_bound) break;  // degeneracies need t at level n+1
    lv.degen.resize(n + 1);
    SparseMatrix cur = m.levels_[n + 1].t * *lv.extra * lv.t_inv;
    lv.degen[0] = cur;
    for (std::size_t i = 1; i <= n; ++i) {
      cur = m.levels_[n + 1].t * cur * lv.t_inv;
      lv.degen[i] = cur;
    }
  }
  return m;
}

const SparseMatrix& ParacyclicModule::face(std::size_t n, std::size_t i) const {
  return levels_[n].face[i];
}

const SparseMatrix& ParacyclicModule::degen(std::size_t n,
                                            std::size_t i) const {
  return levels_[n].degen[i];
}

const SparseMatrix& ParacyclicModule::extra_degen(std::size_t n) const {
  if (!levels_[n].extra)
    throw DimensionMismatch(name_ + ": extra degeneracy unavailable at level " +
                            std::to_string(n));
  return *levels_[n].extra;
}

std::string ParacyclicModule::label(std::size_t n, std::size_t idx) const {
  if (levels_[n].space) return levels_[n].space->label(idx);
  return "e" + std::to_string(idx);
}

SparseMatrix ParacyclicModule::b_matrix(std::size_t n) const {
  const PLevel& lv = levels_[n];
  SparseMatrix acc(levels_[n - 1].dim, lv.dim);
  Scalar sign(1);
  for (std::size_t i = 0; i <= n; ++i) {
    acc = acc + lv.face[i].scaled(sign);
    sign = -sign;
  }
  return acc;
}

SparseMatrix ParacyclicModule::big_t(std::size_t n) const {
  return levels_[n].t.pow(static_cast<long long>(n) + 1);
}

SparseMatrix ParacyclicModule::norm_op(std::size_t n) const {
  const PLevel& lv = levels_[n];
  SparseMatrix acc = SparseMatrix::identity(lv.dim);
  SparseMatrix tp = SparseMatrix::identity(lv.dim);
  for (std::size_t i = 1; i <= n; ++i) {
    tp = lv.t * tp;
    acc = acc + (n % 2 == 1 && i % 2 == 1 ? tp.scaled(Scalar(-1)) : tp);
  }
  return acc;
}

SparseMatrix ParacyclicModule::big_b(std::size_t n) const {
  const SparseMatrix& tnext = levels_[n + 1].t;
  SparseMatrix pre = SparseMatrix::identity(tnext.rows());
  pre = n % 2 == 0 ? pre + tnext : pre - tnext;
  return pre * extra_degen(n) * norm_op(n);
}

SparseVec ParacyclicModule::apply_b(std::size_t n, const SparseVec& v) const {
  const PLevel& lv = levels_[n];
  SparseVec acc;
  for (std::size_t i = 0; i <= n; ++i)
    sparse_axpy(acc, Scalar(i % 2 == 0 ? 1 : -1), lv.face[i].apply(v));
  return acc;
}

SparseVec ParacyclicModule::apply_big_t(std::size_t n,
                                        const SparseVec& v) const {
  SparseVec acc = v;
  for (std::size_t i = 0; i <= n; ++i) acc = levels_[n].t.apply(acc);
  return acc;
}

SparseVec ParacyclicModule::apply_big_b(std::size_t n,
                                        const SparseVec& v) const {
  // N
  SparseVec acc = v;
  SparseVec tp = v;
  for (std::size_t i = 1; i <= n; ++i) {
    tp = levels_[n].t.apply(tp);
    sparse_axpy(acc, Scalar((n % 2 == 1 && i % 2 == 1) ? -1 : 1), tp);
  }
  // s_{-1}
  acc = extra_degen(n).apply(acc);
  // 1 + (-1)^n t
  SparseVec shifted = levels_[n + 1].t.apply(acc);
  sparse_axpy(acc, Scalar(n % 2 == 0 ? 1 : -1), shifted);
  return acc;
}

CheckReport ParacyclicModule::check_axioms(bool cyclic_mode) const {
  CheckReport rep((cyclic_mode ? "cyclic axioms for " : "paracyclic axioms for ") +
                  name_);
  std::size_t L = bound();
  for (std::size_t n = 1; n <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    // d_i d_j = d_{j-1} d_i for i < j
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (n < 2) continue;  // target level n-2 must exist
        rep.check_equal(
            "d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                std::to_string(j - 1) + " d" + std::to_string(i),
            level_loc(n),
            (levels_[n - 1].face[i] * levels_[n].face[j]),
            (levels_[n - 1].face[j - 1] * levels_[n].face[i]), lab);
      }
  }
  for (std::size_t n = 0; n + 1 <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    // s_i s_j = s_{j+1} s_i for i <= j (target level n+2)
    if (n + 2 <= L) {
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          rep.check_equal(
              "s" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                  std::to_string(j + 1) + " s" + std::to_string(i),
              level_loc(n),
              (levels_[n + 1].degen[i] * levels_[n].degen[j]),
              (levels_[n + 1].degen[j + 1] * levels_[n].degen[i]), lab);
    }
    // d_i s_j relations (operators at level n+1)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        SparseMatrix lhs = levels_[n + 1].face[i] * levels_[n].degen[j];
        if (i == j || i == j + 1) {
          rep.check_equal("d" + std::to_string(i) + " s" + std::to_string(j) +
                              " = id",
                          level_loc(n), lhs, SparseMatrix::identity(dim(n)),
                          lab);
        } else if (i < j) {
          rep.check_equal(
              "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                  std::to_string(j - 1) + " d" + std::to_string(i),
              level_loc(n), lhs,
              (levels_[n - 1].degen[j - 1] * levels_[n].face[i]), lab);
        } else {
          rep.check_equal(
              "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                  std::to_string(j) + " d" + std::to_string(i - 1),
              level_loc(n), lhs,
              (levels_[n - 1].degen[j] * levels_[n].face[i - 1]), lab);
        }
      }
  }
  // paracyclic identities (5): d_0 t = d_n, s_0 t = t^2 s_n
  for (std::size_t n = 1; n <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    rep.check_equal("d0 t = d_last", level_loc(n),
                    (levels_[n].face[0] * levels_[n].t), levels_[n].face[n],
                    lab);
  }
  for (std::size_t n = 0; n + 1 <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    rep.check_equal(
        "s0 t = t^2 s_last", level_loc(n),
        (levels_[n].degen[0] * levels_[n].t),
        (levels_[n + 1].t * levels_[n + 1].t * levels_[n].degen[n]), lab);
  }
  if (cyclic_mode) {
    for (std::size_t n = 0; n <= L; ++n) {
      auto lab = [this, n](std::size_t idx) { return label(n, idx); };
      rep.check_equal("t^{n+1} = id", level_loc(n), big_t(n),
                      SparseMatrix::identity(dim(n)), lab);
    }
  }
  return rep;
}

CheckReport ParacyclicModule::check_generation_consistency() const {
  CheckReport rep("generation consistency for " + name_);
  std::size_t L = bound();
  for (std::size_t n = 0; n + 1 <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    rep.check_equal("t = d_last s_{-1}", level_loc(n),
                    (levels_[n + 1].face[n + 1] * extra_degen(n)), levels_[n].t,
                    lab);
    // s_i = t^{i+1} s_{-1} t^{-(i+1)}
    SparseMatrix cur = extra_degen(n);
    for (std::size_t i = 0; i <= n; ++i) {
      cur = levels_[n + 1].t * cur * levels_[n].t_inv;
      rep.check_equal("s" + std::to_string(i) +
                          " generated by conjugating s_{-1}",
                      level_loc(n), cur, levels_[n].degen[i], lab);
    }
  }
  // d_i = t^{-(n-i)} d_n t^{n-i}
  for (std::size_t n = 1; n <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    SparseMatrix cur = levels_[n].face[n];
    for (std::size_t i = n; i-- > 0;) {
      cur = levels_[n - 1].t_inv * cur * levels_[n].t;
      rep.check_equal("d" + std::to_string(i) +
                          " generated by conjugating d_last",
                      level_loc(n), cur, levels_[n].face[i], lab);
    }
  }
  return rep;
}

CheckReport ParacyclicModule::check_lemma22() const {
  CheckReport rep("Lemma 2.2 operators for " + name_);
  std::size_t L = bound();
  for (std::size_t n = 1; n <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    rep.check_equal_streamed(
        "bT = Tb", level_loc(n), dim(n),
        [&](Index j) {
          return apply_b(n, apply_big_t(n, sparse_unit(j)));
        },
        [&](Index j) {
          return apply_big_t(n - 1, apply_b(n, sparse_unit(j)));
        },
        lab);
  }
  for (std::size_t n = 0; n + 1 <= L; ++n) {
    auto lab = [this, n](std::size_t idx) { return label(n, idx); };
    rep.check_equal_streamed(
        "bB + Bb = 1 - T", level_loc(n), dim(n),
        [&](Index j) {
          SparseVec v = sparse_unit(j);
          SparseVec acc = apply_b(n + 1, apply_big_b(n, v));
          if (n >= 1)
            sparse_axpy(acc, Scalar(1), apply_big_b(n - 1, apply_b(n, v)));
          return acc;
        },
        [&](Index j) {
          SparseVec v = sparse_unit(j);
          SparseVec acc = v;
          sparse_axpy(acc, Scalar(-1), apply_big_t(n, v));
          return acc;
        },
        lab);
  }
  return rep;
}

bool ParacyclicModule::is_cyclic() const {
  for (std::size_t n = 0; n <= bound(); ++n)
    if (!big_t(n).is_identity()) return false;
  return true;
}

void ParacyclicModule::ensure_cyclic() const {
  for (std::size_t n = 0; n <= bound(); ++n)
    if (!big_t(n).is_identity())
      throw NotCyclic(name_ + ": t^{n+1} != id at level " + std::to_string(n));
}

MixedComplex ParacyclicModule::mixed_complex() const {
  ensure_cyclic();
  MixedComplex mc;
  mc.name = name_;
  mc.bound = bound();
  mc.dims.resize(bound() + 1);
  mc.small.resize(bound() + 1);
  mc.big.resize(bound());
  for (std::size_t n = 0; n <= bound(); ++n) mc.dims[n] = dim(n);
  for (std::size_t n = 1; n <= bound(); ++n) mc.small[n] = b_matrix(n);
  for (std::size_t n = 0; n + 1 <= bound(); ++n) mc.big[n] = big_b(n);
  CheckReport rep = mc.check();
  if (!rep.all_pass())
    throw AxiomViolation("mixed complex identities fail:\n" + rep.summary());
  return mc;
}

std::vector<SparseMatrix> ParacyclicModule::b_complex() const {
  std::vector<SparseMatrix> d(bound() + 1);
  for (std::size_t n = 1; n <= bound(); ++n) d[n] = b_matrix(n);
  return d;
}

ParacyclicModule algebra_cyclic_module(const AlgebraPtr& alg,
                                       std::size_t level_bound) {
  std::vector<PLevel> levels(level_bound + 1);
  std::vector<TensorSpace> spaces(level_bound + 2);
  for (std::size_t n = 0; n <= level_bound + 1; ++n)
    spaces[n] = TensorSpace::power(alg, n + 1);
  for (std::size_t n = 0; n <= level_bound; ++n) {
    PLevel& lv = levels[n];
    lv.space = spaces[n];
    lv.dim = spaces[n].dim32();
    // t: rotate the last entry to the front
    std::vector<std::size_t> perm(n + 1), iperm(n + 1);
    perm[0] = n;
    for (std::size_t k = 1; k <= n; ++k) perm[k] = k - 1;
    for (std::size_t k = 0; k < n; ++k) iperm[k] = k + 1;
    iperm[n] = 0;
    lv.t = permute_factors(spaces[n], perm).mat;
    lv.t_inv = permute_factors(spaces[n], iperm).mat;
    if (n >= 1) {
      lv.face.resize(n + 1);
      for (std::size_t i = 0; i < n; ++i)
        lv.face[i] = face_multiply(spaces[n], i).mat;
      lv.face[n] = lv.face[0] * lv.t;  // last face = d_0 t
    }
    lv.degen.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      lv.degen[j] = insert_unit(spaces[n], j + 1, alg).mat;
    lv.extra = insert_unit(spaces[n], 0, alg).mat;
  }
  return ParacyclicModule::from_direct("C(" + alg->name() + ")",
                                       std::move(levels));
}

}  // namespace smashhc
