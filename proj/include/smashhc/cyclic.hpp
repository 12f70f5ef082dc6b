// Paracyclic and cyclic modules: a graded family of spaces with face maps,
// degeneracies and an invertible cyclic operator per level, generated from the
// last face map and the extra degeneracy or supplied directly. Also the
// derived operators b, T, N, B and mixed complexes.
//
// Conventions: level n carries faces d_0..d_n (n >= 1), degeneracies s_0..s_n
// into level n+1, the cyclic operator t_n with its inverse, and the extra
// degeneracy s_{-1}. With operators materialized for levels 0..L, the extra
// degeneracy and the derived B exist up to L-1 (both consume t at level n+1).

#ifndef SMASHHC_CYCLIC_HPP
#define SMASHHC_CYCLIC_HPP

#include <functional>
#include <optional>

#include "smashhc/algebra.hpp"
#include "smashhc/report.hpp"

namespace smashhc {

struct PLevel {
  Index dim = 0;
  std::optional<TensorSpace> space;   // for witness labels when tensor-shaped
  std::vector<SparseMatrix> face;     // d_0..d_n : C_n -> C_{n-1}
  std::vector<SparseMatrix> degen;    // s_0..s_n : C_n -> C_{n+1}
  SparseMatrix t, t_inv;              // cyclic operator
  std::optional<SparseMatrix> extra;  // s_{-1} : C_n -> C_{n+1}
};

struct MixedComplex {
  std::string name;
  std::vector<Index> dims;          // degrees 0..bound
  std::vector<SparseMatrix> small;  // b[n]: n -> n-1, valid 1..bound
  std::vector<SparseMatrix> big;    // B[n]: n -> n+1, valid 0..bound-1
  std::size_t bound = 0;

  CheckReport check() const;  // b^2 = 0, B^2 = 0, bB + Bb = 0 within range
};

class ParacyclicModule {
 public:
  // Direct style: all operators supplied. extra degeneracies are recovered
  // as s_{-1} = t^{-1} s_0 t when absent.
  static ParacyclicModule from_direct(std::string name,
                                      std::vector<PLevel> levels);

  // Generator style: t_n := (last face of C_{n+1}) s_{-1}, faces and
  // degeneracies generated by conjugation with t. Suppliers must cover
  // last_face(1..L+1) and extra(0..L).
  static ParacyclicModule from_generators(
      std::string name, std::size_t level_bound,
      const std::function<std::optional<TensorSpace>(std::size_t)>& space_of,
      const std::function<Index(std::size_t)>& dim_of,
      const std::function<SparseMatrix(std::size_t)>& last_face,
      const std::function<SparseMatrix(std::size_t)>& extra_degen);

  const std::string& name() const { return name_; }
  std::size_t bound() const { return levels_.size() - 1; }
  Index dim(std::size_t n) const { return levels_[n].dim; }
  const PLevel& level(std::size_t n) const { return levels_[n]; }
  const SparseMatrix& face(std::size_t n, std::size_t i) const;
  const SparseMatrix& degen(std::size_t n, std::size_t i) const;
  const SparseMatrix& t(std::size_t n) const { return levels_[n].t; }
  const SparseMatrix& t_inv(std::size_t n) const { return levels_[n].t_inv; }
  const SparseMatrix& extra_degen(std::size_t n) const;
  std::string label(std::size_t n, std::size_t idx) const;

  // Derived operators (Eq-style): b = alternating face sum, T = t^{n+1},
  // N = sum (-1)^{in} t^i, B = (1 + (-1)^n t) s_{-1} N.
  SparseMatrix b_matrix(std::size_t n) const;       // 1 <= n <= bound
  SparseMatrix big_t(std::size_t n) const;          // 0 <= n <= bound
  SparseMatrix norm_op(std::size_t n) const;        // 0 <= n <= bound
  SparseMatrix big_b(std::size_t n) const;          // 0 <= n <= bound-1

  SparseVec apply_b(std::size_t n, const SparseVec& v) const;
  SparseVec apply_big_b(std::size_t n, const SparseVec& v) const;
  SparseVec apply_big_t(std::size_t n, const SparseVec& v) const;

  // Simplicial identities (3), paracyclic identities (5), and t^{n+1} = id
  // (4) in cyclic mode, each instance as a matrix identity.
  CheckReport check_axioms(bool cyclic_mode) const;

  // Supplied operators agree with the ones generated from (d_last, s_{-1}).
  CheckReport check_generation_consistency() const;

  // bT = Tb and bB + Bb = 1 - T at levels <= bound-1 (streamed).
  CheckReport check_lemma22() const;

  bool is_cyclic() const;           // t^{n+1} = id at every level
  void ensure_cyclic() const;       // throws NotCyclic

  // Requires cyclicity; b and B then anticommute on the nose.
  MixedComplex mixed_complex() const;
  // The b-only part (valid for any paracyclic module).
  std::vector<SparseMatrix> b_complex() const;

 private:
  std::string name_;
  std::vector<PLevel> levels_;
};

using CyclicModule = ParacyclicModule;

// C_*(A): level n is A^{(x)(n+1)} with the standard operators (multiply
// adjacent entries, rotate last to front, insert units).
ParacyclicModule algebra_cyclic_module(const AlgebraPtr& alg,
                                       std::size_t level_bound);

}  // namespace smashhc

#endif
