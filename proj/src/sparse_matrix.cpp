#include "smashhc/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace smashhc {

SparseVec sparse_unit(Index row, Scalar val) {
  SparseVec v;
  if (!val.is_zero()) v.push_back({row, std::move(val)});
  return v;
}

void sparse_axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
  if (c.is_zero() || w.empty()) return;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].row < w[j].row)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].row < v[i].row) {
      Scalar s = c * w[j].val;
      if (!s.is_zero()) out.push_back({w[j].row, std::move(s)});
      ++j;
    } else {
      Scalar s = v[i].val + c * w[j].val;
      if (!s.is_zero()) out.push_back({v[i].row, std::move(s)});
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

void sparse_scale(SparseVec& v, const Scalar& c) {
  if (c.is_zero()) {
    v.clear();
    return;
  }
  for (auto& e : v) e.val *= c;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].row != b[i].row || a[i].val != b[i].val) return false;
  return true;
}

std::string sparse_str(const SparseVec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << " + ";
    out << "(" << v[i].val.str() << ")e" << v[i].row;
  }
  return out.str();
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.data_[i] = sparse_unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_triplets(
    Index rows, Index cols,
    const std::vector<std::tuple<Index, Index, Scalar>>& triplets) {
  SparseMatrix m(rows, cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols)
      throw DimensionMismatch("triplet out of bounds at (" + std::to_string(r) +
                              "," + std::to_string(c) + ")");
    if (v.is_zero()) continue;
    m.set(r, c, m.get(r, c) + v);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

void SparseMatrix::set_col(Index j, SparseVec v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].row >= rows_ || (i > 0 && v[i - 1].row >= v[i].row))
      throw DimensionMismatch("malformed sparse column");
  }
  data_[j] = std::move(v);
}

void SparseMatrix::add_to_col(Index j, const Scalar& c, const SparseVec& v) {
  sparse_axpy(data_[j], c, v);
}

Scalar SparseMatrix::get(Index r, Index c) const {
  const SparseVec& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, Index row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->val;
  return Scalar(0);
}

void SparseMatrix::set(Index r, Index c, const Scalar& v) {
  SparseVec& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, Index row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    if (v.is_zero())
      col.erase(it);
    else
      it->val = v;
  } else if (!v.is_zero()) {
    col.insert(it, {r, v});
  }
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& e : v) {
    if (e.row >= cols_) throw DimensionMismatch("apply: vector index out of range");
    sparse_axpy(acc, e.val, data_[e.row]);
  }
  return acc;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " * " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  SparseMatrix out(rows_, o.cols_);
  for (Index j = 0; j < o.cols_; ++j) out.data_[j] = apply(o.data_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sum shape mismatch");
  SparseMatrix out = *this;
  for (Index j = 0; j < cols_; ++j) sparse_axpy(out.data_[j], Scalar(1), o.data_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix difference shape mismatch");
  SparseMatrix out = *this;
  for (Index j = 0; j < cols_; ++j)
    sparse_axpy(out.data_[j], Scalar(-1), o.data_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator-() const { return scaled(Scalar(-1)); }

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out = *this;
  for (auto& col : out.data_) sparse_scale(col, c);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  for (Index j = 0; j < cols_; ++j)
    for (const auto& e : data_[j]) out.data_[e.row].push_back({j, e.val});
  return out;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hstack row mismatch");
  SparseMatrix out(rows_, cols_ + o.cols_);
  for (Index j = 0; j < cols_; ++j) out.data_[j] = data_[j];
  for (Index j = 0; j < o.cols_; ++j) out.data_[cols_ + j] = o.data_[j];
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (Index j = 0; j < cols_; ++j)
    if (!sparse_equal(data_[j], o.data_[j])) return false;
  return true;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : data_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (Index j = 0; j < cols_; ++j) {
    const auto& c = data_[j];
    if (c.size() != 1 || c[0].row != j || !c[0].val.is_one()) return false;
  }
  return true;
}

std::optional<Index> SparseMatrix::first_differing_col(const SparseMatrix& a,
                                                       const SparseMatrix& b) {
  Index n = std::min(a.cols(), b.cols());
  for (Index j = 0; j < n; ++j)
    if (!sparse_equal(a.data_[j], b.data_[j])) return j;
  if (a.cols() != b.cols()) return n;
  return std::nullopt;
}

bool SparseMatrix::is_monomial() const {
  if (rows_ != cols_) return false;
  std::vector<bool> seen(rows_, false);
  for (const auto& c : data_) {
    if (c.size() != 1) return false;
    if (seen[c[0].row]) return false;
    seen[c[0].row] = true;
  }
  return true;
}

SparseMatrix SparseMatrix::inverse() const {
  if (rows_ != cols_) throw NotInvertible("inverse of non-square matrix");
  if (is_monomial()) {
    SparseMatrix out(rows_, cols_);
    for (Index j = 0; j < cols_; ++j) {
      const Entry& e = data_[j][0];
      out.data_[e.row] = sparse_unit(j, e.val.inverse());
    }
    return out;
  }
  LinearSolver solver(*this);
  if (solver.rank() != rows_) throw NotInvertible("matrix is singular");
  SparseMatrix out(rows_, cols_);
  for (Index i = 0; i < rows_; ++i) {
    auto x = solver.solve(sparse_unit(i));
    if (!x) throw NotInvertible("matrix is singular");
    out.data_[i] = std::move(*x);
  }
  return out;
}

SparseMatrix SparseMatrix::pow(long long e) const {
  if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
  SparseMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  SparseMatrix acc = identity(rows_);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

std::string SparseMatrix::str() const {
  std::ostringstream out;
  out << rows_ << "x" << cols_ << " [";
  for (Index j = 0; j < cols_; ++j) {
    if (j) out << "; ";
    out << "c" << j << ": " << sparse_str(data_[j]);
  }
  out << "]";
  return out.str();
}

void Eliminator::reduce(SparseVec& col,
                        std::vector<std::pair<std::size_t, Scalar>>* used) const {
  // Entries appear sorted; pivot columns only have entries at rows >= their
  // pivot row, so one ascending sweep terminates.
  std::size_t i = 0;
  while (i < col.size()) {
    auto it = by_row_.find(col[i].row);
    if (it == by_row_.end()) {
      ++i;
      continue;
    }
    Scalar c = col[i].val;  // pivot is normalized to 1
    if (used) used->emplace_back(it->second, c);
    sparse_axpy(col, -c, pivots_[it->second].col);
    // the entry at this row is now gone; rescan from the same position
  }
}

Eliminator::FeedResult Eliminator::feed(SparseVec col) {
  std::vector<std::pair<std::size_t, Scalar>> used;
  reduce(col, track_ ? &used : nullptr);
  std::size_t my_index = fed_++;
  if (col.empty()) {
    FeedResult res;
    res.in_span = true;
    if (track_) {
      SparseVec comb;
      for (const auto& [pi, c] : used)
        sparse_axpy(comb, c, pivots_[pi].comb);
      res.combination = std::move(comb);
    }
    return res;
  }
  Pivot p;
  p.row = col[0].row;
  Scalar lead = col[0].val;
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    sparse_scale(col, inv);
  }
  if (track_) {
    SparseVec comb = sparse_unit(static_cast<Index>(my_index));
    for (const auto& [pi, c] : used) sparse_axpy(comb, -c, pivots_[pi].comb);
    if (!lead.is_one()) sparse_scale(comb, lead.inverse());
    p.comb = std::move(comb);
  }
  p.col = std::move(col);
  by_row_[p.row] = pivots_.size();
  pivots_.push_back(std::move(p));
  return {false, {}};
}

std::optional<SparseVec> Eliminator::express(SparseVec col) const {
  std::vector<std::pair<std::size_t, Scalar>> used;
  reduce(col, &used);
  if (!col.empty()) return std::nullopt;
  SparseVec comb;
  for (const auto& [pi, c] : used) {
    if (track_) {
      sparse_axpy(comb, c, pivots_[pi].comb);
    } else {
      // without tracking, coefficients refer to pivot indices
      sparse_axpy(comb, c, sparse_unit(static_cast<Index>(pi)));
    }
  }
  return comb;
}

bool Eliminator::contains(const SparseVec& col) const {
  SparseVec c = col;
  reduce(c, nullptr);
  return c.empty();
}

SparseMatrix Eliminator::canonical_basis() const {
  // Back-eliminate pivot rows across pivot columns, largest pivot row first.
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivots_[a].row > pivots_[b].row;
  });
  std::vector<SparseVec> cols(pivots_.size());
  std::map<Index, std::size_t> done;  // pivot row -> index into cols
  for (std::size_t oi : order) {
    SparseVec c = pivots_[oi].col;
    std::size_t i = 0;
    while (i < c.size()) {
      if (c[i].row != pivots_[oi].row) {
        auto it = done.find(c[i].row);
        if (it != done.end()) {
          Scalar coef = c[i].val;
          sparse_axpy(c, -coef, cols[it->second]);
          continue;
        }
      }
      ++i;
    }
    done[pivots_[oi].row] = oi;
    cols[oi] = std::move(c);
  }
  // Sort by pivot row ascending for a canonical column order.
  std::vector<std::size_t> final_order(pivots_.size());
  for (std::size_t i = 0; i < final_order.size(); ++i) final_order[i] = i;
  std::sort(final_order.begin(), final_order.end(),
            [&](std::size_t a, std::size_t b) {
              return pivots_[a].row < pivots_[b].row;
            });
  SparseMatrix out(rows_, static_cast<Index>(pivots_.size()));
  for (std::size_t k = 0; k < final_order.size(); ++k)
    out.set_col(static_cast<Index>(k), cols[final_order[k]]);
  return out;
}

Index rank(const SparseMatrix& m) {
  Eliminator e(m.rows());
  for (Index j = 0; j < m.cols(); ++j) e.feed(m.col(j));
  return static_cast<Index>(e.rank());
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
  Eliminator e(m.rows(), /*track=*/true);
  std::vector<SparseVec> kernel;
  for (Index j = 0; j < m.cols(); ++j) {
    auto res = e.feed(m.col(j));
    if (res.in_span) {
      // column j = combination of earlier pivot columns
      SparseVec v = sparse_unit(j);
      sparse_axpy(v, Scalar(-1), res.combination);
      kernel.push_back(std::move(v));
    }
  }
  SparseMatrix out(m.cols(), static_cast<Index>(kernel.size()));
  for (Index j = 0; j < out.cols(); ++j) out.set_col(j, std::move(kernel[j]));
  return out;
}

SparseMatrix image_basis(const SparseMatrix& m) {
  Eliminator e(m.rows());
  for (Index j = 0; j < m.cols(); ++j) e.feed(m.col(j));
  return e.canonical_basis();
}

LinearSolver::LinearSolver(const SparseMatrix& gens)
    : elim_(gens.rows(), /*track=*/true) {
  for (Index j = 0; j < gens.cols(); ++j) elim_.feed(gens.col(j));
}

std::optional<SparseVec> LinearSolver::solve(const SparseVec& v) const {
  return elim_.express(v);
}

namespace {

SparseMatrix canonicalize_span(Index ambient, const SparseMatrix& gens) {
  if (gens.cols() > 0 && gens.rows() != ambient)
    throw DimensionMismatch("span generators have wrong ambient dimension");
  Eliminator e(ambient);
  for (Index j = 0; j < gens.cols(); ++j) e.feed(gens.col(j));
  return e.canonical_basis();
}

}  // namespace

Subquotient::Subquotient(Index ambient, const SparseMatrix& z_gens,
                         const SparseMatrix& b_gens)
    : ambient_(ambient) {
  z_ = canonicalize_span(ambient, z_gens);
  b_ = canonicalize_span(ambient, b_gens);
  {
    Eliminator ez(ambient);
    for (Index j = 0; j < z_.cols(); ++j) ez.feed(z_.col(j));
    for (Index j = 0; j < b_.cols(); ++j)
      if (!ez.contains(b_.col(j)))
        throw ContainmentViolation("B is not contained in Z");
  }
  // Section: columns of the canonical Z basis that stay independent mod B.
  Eliminator esec(ambient);
  for (Index j = 0; j < b_.cols(); ++j) esec.feed(b_.col(j));
  std::vector<Index> picked;
  for (Index j = 0; j < z_.cols(); ++j) {
    auto res = esec.feed(z_.col(j));
    if (!res.in_span) picked.push_back(j);
  }
  section_ = SparseMatrix(ambient, static_cast<Index>(picked.size()));
  for (Index k = 0; k < section_.cols(); ++k)
    section_.set_col(k, z_.col(picked[k]));
  solver_ = std::make_unique<Eliminator>(ambient, /*track=*/true);
  for (Index j = 0; j < b_.cols(); ++j) solver_->feed(b_.col(j));
  for (Index j = 0; j < section_.cols(); ++j) solver_->feed(section_.col(j));
}

Subquotient Subquotient::full_mod(Index ambient, const SparseMatrix& b_gens) {
  return Subquotient(ambient, SparseMatrix::identity(ambient), b_gens);
}

Subquotient Subquotient::sub_only(Index ambient, const SparseMatrix& z_gens) {
  return Subquotient(ambient, z_gens, SparseMatrix(ambient, 0));
}

std::optional<SparseVec> Subquotient::coords(const SparseVec& v) const {
  auto comb = solver_->express(v);
  if (!comb) return std::nullopt;
  // Coefficients over [b | section]; keep the section block.
  Index nb = b_.cols();
  SparseVec out;
  for (const auto& e : *comb)
    if (e.row >= nb) out.push_back({e.row - nb, e.val});
  return out;
}

SparseMatrix induced_map(const SparseMatrix& m, const Subquotient& src,
                         const Subquotient& dst) {
  if (m.cols() != src.ambient() || m.rows() != dst.ambient())
    throw DimensionMismatch("induced_map: shape does not match subquotients");
  // Z containment and B containment are both required for well-definedness.
  LinearSolver bsolver(dst.b_basis());
  for (Index j = 0; j < src.b_basis().cols(); ++j) {
    SparseVec w = m.apply(src.b_basis().col(j));
    if (!bsolver.contains(w))
      throw NotWellDefined("operator does not preserve the divided subspace");
  }
  SparseMatrix out(dst.dim(), src.dim());
  for (Index j = 0; j < src.dim(); ++j) {
    SparseVec w = m.apply(src.section().col(j));
    auto c = dst.coords(w);
    if (!c)
      throw NotWellDefined("operator image leaves the target subspace Z");
    out.set_col(j, std::move(*c));
  }
  return out;
}

Index subquotient_dim(Index ambient, const SparseMatrix& z_gens,
                      const SparseMatrix& b_gens) {
  Subquotient sq(ambient, z_gens, b_gens);
  return sq.dim();
}

}  // namespace smashhc
