// Sparse exact matrices (column-major) and deterministic elimination.
//
// Columns are kept sorted by row with no explicit zeros, which makes equality
// a plain structural comparison. Elimination processes columns left to right
// and pivots on the lowest-index nonzero row of the reduced column, with the
// pivot entry normalized to 1; the resulting subspace bases are the reduced
// column echelon form, i.e. canonical for the span and independent of the
// generating set.

#ifndef SMASHHC_SPARSE_MATRIX_HPP
#define SMASHHC_SPARSE_MATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smashhc/errors.hpp"
#include "smashhc/scalar.hpp"

namespace smashhc {

using Index = std::uint32_t;

struct Entry {
  Index row;
  Scalar val;
};

// Sorted by row, no zero values.
using SparseVec = std::vector<Entry>;

SparseVec sparse_unit(Index row, Scalar val = Scalar(1));
// v += c * w
void sparse_axpy(SparseVec& v, const Scalar& c, const SparseVec& w);
void sparse_scale(SparseVec& v, const Scalar& c);
bool sparse_equal(const SparseVec& a, const SparseVec& b);
std::string sparse_str(const SparseVec& v);

class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMatrix identity(Index n);
  static SparseMatrix from_triplets(
      Index rows, Index cols,
      const std::vector<std::tuple<Index, Index, Scalar>>& triplets);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nnz() const;

  const SparseVec& col(Index j) const { return data_[j]; }
  void set_col(Index j, SparseVec v);
  void add_to_col(Index j, const Scalar& c, const SparseVec& v);
  Scalar get(Index r, Index c) const;
  void set(Index r, Index c, const Scalar& v);

  SparseVec apply(const SparseVec& v) const;  // M * v

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix operator-() const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseMatrix transpose() const;
  SparseMatrix hstack(const SparseMatrix& o) const;

  bool operator==(const SparseMatrix& o) const;
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  // Lowest column index where the two matrices differ (for witnesses).
  static std::optional<Index> first_differing_col(const SparseMatrix& a,
                                                  const SparseMatrix& b);

  // One nonzero entry per column and per row; such inverses are structural.
  bool is_monomial() const;
  SparseMatrix inverse() const;  // throws NotInvertible

  SparseMatrix pow(long long e) const;  // square matrix power, e may be < 0

  std::string str() const;  // small-matrix debug rendering

 private:
  Index rows_, cols_;
  std::vector<SparseVec> data_;
};

// Incremental column echelon with optional combination tracking.
class Eliminator {
 public:
  explicit Eliminator(Index rows, bool track = false) : rows_(rows), track_(track) {}

  struct FeedResult {
    bool in_span;          // column reduced to zero
    SparseVec combination; // coefficients over previously fed columns (track)
  };
  FeedResult feed(SparseVec col);

  // Reduce without inserting; combination over fed columns if in span.
  std::optional<SparseVec> express(SparseVec col) const;
  bool contains(const SparseVec& col) const;

  std::size_t rank() const { return pivots_.size(); }
  Index rows() const { return rows_; }

  // Reduced column echelon basis of the span, pivot rows ascending.
  SparseMatrix canonical_basis() const;

 private:
  struct Pivot {
    Index row;
    SparseVec col;   // normalized: entry at `row` is 1, other entries at rows > row
    SparseVec comb;  // col as combination of original fed columns
  };
  // Reduce `col` by the current pivots; records coefficients (by pivot index).
  void reduce(SparseVec& col, std::vector<std::pair<std::size_t, Scalar>>* used) const;

  Index rows_;
  bool track_;
  std::size_t fed_ = 0;
  std::map<Index, std::size_t> by_row_;
  std::vector<Pivot> pivots_;
};

Index rank(const SparseMatrix& m);
// Canonical basis of the kernel / image (columns).
SparseMatrix kernel_basis(const SparseMatrix& m);
SparseMatrix image_basis(const SparseMatrix& m);

// Membership solver for the column span of a fixed matrix.
class LinearSolver {
 public:
  explicit LinearSolver(const SparseMatrix& gens);
  // Coefficients over the generator columns, or nullopt if v is outside.
  std::optional<SparseVec> solve(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return solve(v).has_value(); }
  std::size_t rank() const { return elim_.rank(); }

 private:
  Eliminator elim_;
};

// A subquotient Z/B of an ambient coordinate space, with a fixed section.
class Subquotient {
 public:
  // Spans are canonicalized; requires span(B) contained in span(Z).
  Subquotient(Index ambient, const SparseMatrix& z_gens, const SparseMatrix& b_gens);
  static Subquotient full_mod(Index ambient, const SparseMatrix& b_gens);
  static Subquotient sub_only(Index ambient, const SparseMatrix& z_gens);

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(section_.cols()); }
  Index z_dim() const { return static_cast<Index>(z_.cols()); }
  Index b_dim() const { return static_cast<Index>(b_.cols()); }

  const SparseMatrix& z_basis() const { return z_; }
  const SparseMatrix& b_basis() const { return b_; }
  // ambient x dim: representative vectors for the quotient basis.
  const SparseMatrix& section() const { return section_; }

  // Quotient coordinates of an ambient vector; nullopt if outside span(Z).
  std::optional<SparseVec> coords(const SparseVec& v) const;

 private:
  Index ambient_;
  SparseMatrix z_, b_, section_;
  std::unique_ptr<Eliminator> solver_;  // fed with [b | section]
};

// The map induced on subquotients by M; checks both containments.
SparseMatrix induced_map(const SparseMatrix& m, const Subquotient& src,
                         const Subquotient& dst);

Index subquotient_dim(Index ambient, const SparseMatrix& z_gens,
                      const SparseMatrix& b_gens);

}  // namespace smashhc

#endif
