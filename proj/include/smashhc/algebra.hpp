// Finite-dimensional unital associative algebras given by structure constants,
// tensor-power spaces, and the linear maps between them.
//
// Indexing convention (frozen; serialization and every sign-sensitive operator
// depend on it): a tensor space with factors F_0 .. F_{m-1} uses mixed-radix
// flat indices with the LEFTMOST factor most significant.

#ifndef SMASHHC_ALGEBRA_HPP
#define SMASHHC_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "smashhc/sparse_matrix.hpp"

namespace smashhc {

class FinDimAlgebra;
using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

class FinDimAlgebra {
 public:
  // mult[i * dim + j] = coefficients of e_i * e_j.
  FinDimAlgebra(std::string name, std::vector<std::string> basis_labels,
                SparseVec unit, std::vector<SparseVec> mult);

  const std::string& name() const { return name_; }
  Index dim() const { return dim_; }
  const std::string& label(Index i) const { return labels_[i]; }
  const SparseVec& unit() const { return unit_; }
  const SparseVec& mult(Index i, Index j) const { return mult_[i * dim_ + j]; }

  SparseVec multiply(const SparseVec& u, const SparseVec& v) const;

  // Associativity on all basis triples and two-sided unitality; throws
  // AxiomViolation naming the violating triple.
  void check() const;

  bool same_as(const FinDimAlgebra& o) const {
    return this == &o || (name_ == o.name_ && dim_ == o.dim_);
  }

 private:
  std::string name_;
  Index dim_;
  std::vector<std::string> labels_;
  SparseVec unit_;
  std::vector<SparseVec> mult_;
};

class TensorSpace {
 public:
  TensorSpace() : dim_(1) {}  // empty tensor product = ground field
  explicit TensorSpace(std::vector<AlgebraPtr> factors);

  static TensorSpace power(const AlgebraPtr& a, std::size_t n);
  static TensorSpace concat(const TensorSpace& a, const TensorSpace& b);

  std::size_t arity() const { return factors_.size(); }
  std::size_t dim() const { return dim_; }
  Index dim32() const;
  const AlgebraPtr& factor(std::size_t k) const { return factors_[k]; }
  const std::vector<AlgebraPtr>& factors() const { return factors_; }

  std::size_t flat(const std::vector<Index>& multi) const;
  std::vector<Index> multi(std::size_t flat) const;
  std::string label(std::size_t flat) const;

  bool compatible(const TensorSpace& o) const;
  std::string describe() const;

 private:
  std::vector<AlgebraPtr> factors_;
  std::size_t dim_;
  std::vector<std::size_t> stride_;
};

struct TensorMap {
  TensorSpace source, target;
  SparseMatrix mat;

  TensorMap() = default;
  TensorMap(TensorSpace src, TensorSpace tgt, SparseMatrix m);

  static TensorMap identity(const TensorSpace& s);
  static TensorMap zero(const TensorSpace& src, const TensorSpace& tgt);

  // Composition: (*this) after o.
  TensorMap operator*(const TensorMap& o) const;
  TensorMap operator+(const TensorMap& o) const;
  TensorMap operator-(const TensorMap& o) const;
  TensorMap scaled(const Scalar& c) const;
  TensorMap pow(long long e) const;

  bool operator==(const TensorMap& o) const { return mat == o.mat; }

  // Reinterpret the same matrix between different (equal-dimension) spaces.
  TensorMap with_spaces(TensorSpace src, TensorSpace tgt) const;
};

// f^{m,n}: (first ++ second) -> (second ++ first), a permutation matrix.
TensorMap flip_map(const TensorSpace& first, const TensorSpace& second);

// id^{left} (x) op (x) id^{right}.
TensorMap embed_operator(const TensorMap& op, const TensorSpace& left,
                         const TensorSpace& right);

// Multiply adjacent factors k, k+1 (which must be the same algebra).
TensorMap face_multiply(const TensorSpace& space, std::size_t k);

// Insert the unit of `alg` as a new factor at position pos (0..arity).
TensorMap insert_unit(const TensorSpace& space, std::size_t pos,
                      const AlgebraPtr& alg);

// General factor permutation: target slot k holds source slot perm[k].
TensorMap permute_factors(const TensorSpace& space,
                          const std::vector<std::size_t>& perm);

}  // namespace smashhc

#endif
