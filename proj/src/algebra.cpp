#include "smashhc/algebra.hpp"

#include <sstream>

namespace smashhc {

FinDimAlgebra::FinDimAlgebra(std::string name,
                             std::vector<std::string> basis_labels,
                             SparseVec unit, std::vector<SparseVec> mult)
    : name_(std::move(name)),
      dim_(static_cast<Index>(basis_labels.size())),
      labels_(std::move(basis_labels)),
      unit_(std::move(unit)),
      mult_(std::move(mult)) {
  if (dim_ == 0) throw DimensionMismatch(name_ + ": zero-dimensional algebra");
  if (mult_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw DimensionMismatch(name_ + ": structure constant table has wrong size");
  for (const auto& col : mult_)
    for (const auto& e : col)
      if (e.row >= dim_)
        throw DimensionMismatch(name_ + ": structure constant index out of range");
  for (const auto& e : unit_)
    if (e.row >= dim_)
      throw DimensionMismatch(name_ + ": unit vector index out of range");
}

SparseVec FinDimAlgebra::multiply(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& eu : u) {
    if (eu.row >= dim_) throw DimensionMismatch(name_ + ": vector too long");
    for (const auto& ev : v) {
      if (ev.row >= dim_) throw DimensionMismatch(name_ + ": vector too long");
      sparse_axpy(out, eu.val * ev.val, mult(eu.row, ev.row));
    }
  }
  return out;
}

void FinDimAlgebra::check() const {
  for (Index i = 0; i < dim_; ++i) {
    SparseVec ei = sparse_unit(i);
    if (!sparse_equal(multiply(unit_, ei), ei) ||
        !sparse_equal(multiply(ei, unit_), ei))
      throw AxiomViolation(name_ + ": unitality fails at basis element " +
                           labels_[i]);
  }
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      for (Index k = 0; k < dim_; ++k) {
        SparseVec lhs = multiply(mult(i, j), sparse_unit(k));
        SparseVec rhs = multiply(sparse_unit(i), mult(j, k));
        if (!sparse_equal(lhs, rhs))
          throw AxiomViolation(name_ + ": associativity fails at (" +
                               labels_[i] + ", " + labels_[j] + ", " +
                               labels_[k] + ")");
      }
}

TensorSpace::TensorSpace(std::vector<AlgebraPtr> factors)
    : factors_(std::move(factors)) {
  stride_.assign(factors_.size(), 1);
  dim_ = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    stride_[k] = dim_;
    dim_ *= factors_[k]->dim();
  }
}

TensorSpace TensorSpace::power(const AlgebraPtr& a, std::size_t n) {
  return TensorSpace(std::vector<AlgebraPtr>(n, a));
}

TensorSpace TensorSpace::concat(const TensorSpace& a, const TensorSpace& b) {
  std::vector<AlgebraPtr> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return TensorSpace(std::move(f));
}

Index TensorSpace::dim32() const {
  if (dim_ > 0xffffffffULL)
    throw DimensionMismatch("tensor space too large to materialize: " +
                            std::to_string(dim_));
  return static_cast<Index>(dim_);
}

std::size_t TensorSpace::flat(const std::vector<Index>& multi) const {
  std::size_t f = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) f += multi[k] * stride_[k];
  return f;
}

std::vector<Index> TensorSpace::multi(std::size_t flat) const {
  std::vector<Index> m(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    m[k] = static_cast<Index>(flat / stride_[k]);
    flat %= stride_[k];
  }
  return m;
}

std::string TensorSpace::label(std::size_t flat) const {
  if (factors_.empty()) return "1";
  auto m = multi(flat);
  std::ostringstream out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out << "(x)";
    out << factors_[k]->label(m[k]);
  }
  return out.str();
}

bool TensorSpace::compatible(const TensorSpace& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (!factors_[k]->same_as(*o.factors_[k])) return false;
  return true;
}

std::string TensorSpace::describe() const {
  if (factors_.empty()) return "k";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out << "(x)";
    out << factors_[k]->name();
  }
  return out.str();
}

TensorMap::TensorMap(TensorSpace src, TensorSpace tgt, SparseMatrix m)
    : source(std::move(src)), target(std::move(tgt)), mat(std::move(m)) {
  if (mat.cols() != source.dim() || mat.rows() != target.dim())
    throw DimensionMismatch("tensor map matrix shape does not match spaces");
}

TensorMap TensorMap::identity(const TensorSpace& s) {
  return TensorMap(s, s, SparseMatrix::identity(s.dim32()));
}

TensorMap TensorMap::zero(const TensorSpace& src, const TensorSpace& tgt) {
  return TensorMap(src, tgt, SparseMatrix(tgt.dim32(), src.dim32()));
}

TensorMap TensorMap::operator*(const TensorMap& o) const {
  if (!source.compatible(o.target))
    throw DimensionMismatch("tensor map composition: " + o.target.describe() +
                            " does not feed " + source.describe());
  return TensorMap(o.source, target, mat * o.mat);
}

TensorMap TensorMap::operator+(const TensorMap& o) const {
  return TensorMap(source, target, mat + o.mat);
}

TensorMap TensorMap::operator-(const TensorMap& o) const {
  return TensorMap(source, target, mat - o.mat);
}

TensorMap TensorMap::scaled(const Scalar& c) const {
  return TensorMap(source, target, mat.scaled(c));
}

TensorMap TensorMap::pow(long long e) const {
  if (!source.compatible(target))
    throw DimensionMismatch("power of a non-endomorphism tensor map");
  return TensorMap(source, target, mat.pow(e));
}

TensorMap TensorMap::with_spaces(TensorSpace src, TensorSpace tgt) const {
  if (src.dim() != source.dim() || tgt.dim() != target.dim())
    throw DimensionMismatch("with_spaces: dimension mismatch");
  return TensorMap(std::move(src), std::move(tgt), mat);
}

TensorMap flip_map(const TensorSpace& first, const TensorSpace& second) {
  TensorSpace src = TensorSpace::concat(first, second);
  TensorSpace tgt = TensorSpace::concat(second, first);
  std::size_t d1 = first.dim(), d2 = second.dim();
  SparseMatrix m(tgt.dim32(), src.dim32());
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      m.set_col(static_cast<Index>(a * d2 + b),
                sparse_unit(static_cast<Index>(b * d1 + a)));
  return TensorMap(std::move(src), std::move(tgt), std::move(m));
}

TensorMap embed_operator(const TensorMap& op, const TensorSpace& left,
                         const TensorSpace& right) {
  TensorSpace src = TensorSpace::concat(TensorSpace::concat(left, op.source), right);
  TensorSpace tgt = TensorSpace::concat(TensorSpace::concat(left, op.target), right);
  std::size_t ld = left.dim(), rd = right.dim();
  std::size_t sd = op.source.dim(), td = op.target.dim();
  SparseMatrix m(tgt.dim32(), src.dim32());
  for (std::size_t l = 0; l < ld; ++l) {
    for (std::size_t s = 0; s < sd; ++s) {
      const SparseVec& opcol = op.mat.col(static_cast<Index>(s));
      for (std::size_t r = 0; r < rd; ++r) {
        SparseVec col;
        col.reserve(opcol.size());
        for (const auto& e : opcol)
          col.push_back(
              {static_cast<Index>((l * td + e.row) * rd + r), e.val});
        m.set_col(static_cast<Index>((l * sd + s) * rd + r), std::move(col));
      }
    }
  }
  return TensorMap(std::move(src), std::move(tgt), std::move(m));
}

TensorMap face_multiply(const TensorSpace& space, std::size_t k) {
  if (k + 1 >= space.arity())
    throw DimensionMismatch("face_multiply: factor index out of range");
  const AlgebraPtr& alg = space.factor(k);
  if (!alg->same_as(*space.factor(k + 1)))
    throw DimensionMismatch("face_multiply: adjacent factors differ");
  std::vector<AlgebraPtr> tf;
  for (std::size_t i = 0; i < space.arity(); ++i)
    if (i != k + 1) tf.push_back(space.factor(i));
  TensorSpace tgt(std::move(tf));
  // left block l, pair (i, j), right block r
  std::size_t rd = 1;
  for (std::size_t i = k + 2; i < space.arity(); ++i) rd *= space.factor(i)->dim();
  std::size_t d = alg->dim();
  std::size_t ld = space.dim() / (rd * d * d);
  SparseMatrix m(tgt.dim32(), space.dim32());
  for (std::size_t l = 0; l < ld; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const SparseVec& prod = alg->mult(static_cast<Index>(i), static_cast<Index>(j));
        for (std::size_t r = 0; r < rd; ++r) {
          SparseVec col;
          col.reserve(prod.size());
          for (const auto& e : prod)
            col.push_back({static_cast<Index>((l * d + e.row) * rd + r), e.val});
          m.set_col(static_cast<Index>(((l * d + i) * d + j) * rd + r),
                    std::move(col));
        }
      }
  return TensorMap(space, std::move(tgt), std::move(m));
}

TensorMap insert_unit(const TensorSpace& space, std::size_t pos,
                      const AlgebraPtr& alg) {
  if (pos > space.arity())
    throw DimensionMismatch("insert_unit: position out of range");
  std::vector<AlgebraPtr> tf;
  for (std::size_t i = 0; i < pos; ++i) tf.push_back(space.factor(i));
  tf.push_back(alg);
  for (std::size_t i = pos; i < space.arity(); ++i) tf.push_back(space.factor(i));
  TensorSpace tgt(std::move(tf));
  std::size_t rd = 1;
  for (std::size_t i = pos; i < space.arity(); ++i) rd *= space.factor(i)->dim();
  std::size_t ld = space.dim() / rd;
  std::size_t d = alg->dim();
  SparseMatrix m(tgt.dim32(), space.dim32());
  const SparseVec& u = alg->unit();
  for (std::size_t l = 0; l < ld; ++l)
    for (std::size_t r = 0; r < rd; ++r) {
      SparseVec col;
      col.reserve(u.size());
      for (const auto& e : u)
        col.push_back({static_cast<Index>((l * d + e.row) * rd + r), e.val});
      m.set_col(static_cast<Index>(l * rd + r), std::move(col));
    }
  return TensorMap(space, std::move(tgt), std::move(m));
}

TensorMap permute_factors(const TensorSpace& space,
                          const std::vector<std::size_t>& perm) {
  if (perm.size() != space.arity())
    throw DimensionMismatch("permute_factors: permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  std::vector<AlgebraPtr> tf(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || seen[perm[k]])
      throw DimensionMismatch("permute_factors: not a permutation");
    seen[perm[k]] = true;
    tf[k] = space.factor(perm[k]);
  }
  TensorSpace tgt(std::move(tf));
  SparseMatrix m(tgt.dim32(), space.dim32());
  std::vector<Index> tm(perm.size());
  for (std::size_t f = 0; f < space.dim(); ++f) {
    auto sm = space.multi(f);
    for (std::size_t k = 0; k < perm.size(); ++k) tm[k] = sm[perm[k]];
    m.set_col(static_cast<Index>(f),
              sparse_unit(static_cast<Index>(tgt.flat(tm))));
  }
  return TensorMap(space, std::move(tgt), std::move(m));
}

}  // namespace smashhc
