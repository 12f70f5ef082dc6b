// The cylindrical module A natural B over a strong smash product: the grid of
// spaces B^{(x)(p+1)} (x) A^{(x)(q+1)} with unbarred operators acting on the
// B side and barred operators on the A side, the certification suite, the
// diagonal cyclic module, the Phi/Psi comparison with C_*(A # B), and the
// total mixed complex.
//
// Sign convention for totalization: the barred operators carry the Koszul
// twist (-1)^p at bidegree (p,q), which is what makes b-bar anticommute with
// B and the total differentials square to zero. The per-row / per-column
// paracyclic modules stay untwisted.

#ifndef SMASHHC_CYLINDRICAL_HPP
#define SMASHHC_CYLINDRICAL_HPP

#include <map>
#include <memory>
#include <mutex>

#include "smashhc/cyclic.hpp"
#include "smashhc/smash.hpp"

namespace smashhc {

// The total mixed complex lives on the degeneracy-normalized cells
// N(p,q) = A natural B(p,q) / (images of all s_i and s-bar_j). On the
// unnormalized chains B^2 = (1 + (-1)^{n+1} t)(1 - T) s_{-1} s_{-1} N is a
// nonzero multiple of (1 - T) whenever a row is paracyclic but not cyclic, so
// the mixed-complex identities only hold after normalization; the homology is
// unchanged.
struct TotalMixedComplex {
  MixedComplex mixed;
  // per total degree: the cells (i, j) in order of increasing i, with offsets
  // into the normalized coordinates
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells;
  std::vector<std::vector<Index>> offsets;
};

class CylindricalModule {
 public:
  struct Cell {
    TensorSpace space;
    std::vector<SparseMatrix> face;    // d_0..d_p (p >= 1)
    std::vector<SparseMatrix> degen;   // s_0..s_p
    SparseMatrix t, t_inv;
    std::vector<SparseMatrix> bface;   // d-bar_0..d-bar_q (q >= 1)
    std::vector<SparseMatrix> bdegen;  // s-bar_0..s-bar_q
    SparseMatrix bt, bt_inv;
  };

  explicit CylindricalModule(SmashAlgebra smash);

  const SmashAlgebra& smash() const { return smash_; }
  const Cell& cell(std::size_t p, std::size_t q) const;  // built lazily
  Index dim(std::size_t p, std::size_t q) const;

  // Row q as a paracyclic module in p (unbarred operators), levels <= pmax;
  // column p in q (barred operators), levels <= qmax.
  ParacyclicModule row_module(std::size_t q, std::size_t pmax) const;
  ParacyclicModule col_module(std::size_t p, std::size_t qmax) const;

  // Untwisted per-cell differentials.
  SparseMatrix row_b(std::size_t p, std::size_t q) const;       // -> (p-1, q)
  SparseMatrix col_b(std::size_t p, std::size_t q) const;       // -> (p, q-1)
  SparseMatrix row_big_b(std::size_t p, std::size_t q) const;   // -> (p+1, q)
  SparseMatrix col_big_b(std::size_t p, std::size_t q) const;   // -> (p, q+1)
  SparseMatrix row_big_t(std::size_t p, std::size_t q) const;   // t^{p+1}
  SparseMatrix col_big_t(std::size_t p, std::size_t q) const;   // t-bar^{q+1}

  // Bi-paracyclic certification on the rectangle (p, q) <= (p_bound, q_bound):
  // row/column paracyclic axioms, all barred/unbarred commutation pairs, and
  // the cylindrical condition t^{p+1} t-bar^{q+1} = id per cell.
  CheckReport certify(std::size_t p_bound, std::size_t q_bound) const;

  // Cross-direction anticommutation with the Koszul-twisted barred operators:
  // b-bar B = -B b-bar and B-bar b = -b B-bar, per cell.
  CheckReport check_cross_anticommutation(std::size_t p_bound,
                                          std::size_t q_bound) const;

  // Degeneracy-normalized cell: the quotient by the images of all s_i from
  // (p-1, q) and all s-bar_j from (p, q-1).
  const Subquotient& normalized_cell(std::size_t p, std::size_t q) const;
  // Operators induced on the normalized cells.
  SparseMatrix norm_row_b(std::size_t p, std::size_t q) const;
  SparseMatrix norm_col_b(std::size_t p, std::size_t q) const;
  SparseMatrix norm_row_big_b(std::size_t p, std::size_t q) const;
  SparseMatrix norm_col_big_b(std::size_t p, std::size_t q) const;
  SparseMatrix norm_row_big_t(std::size_t p, std::size_t q) const;

  // The diagonal cyclic module Delta_n = cell(n, n) with composed operators.
  ParacyclicModule diagonal(std::size_t n_max) const;

  // C_n(A # B) with levels 0..n_max (the comparison target of Phi/Psi).
  ParacyclicModule smash_cyclic(std::size_t n_max) const;

  // Phi_n: Delta_n -> C_n(A#B) and Psi_n: C_n(A#B) -> Delta_n.
  TensorMap phi(std::size_t n) const;
  TensorMap psi(std::size_t n) const;
  // Phi Psi = Psi Phi = id and full cyclic-operator intertwining to n_max.
  CheckReport check_phi_psi(std::size_t n_max) const;

  // Total mixed complex on total degrees <= n_max (cells i + j <= n_max),
  // with the identities verified.
  TotalMixedComplex total_mixed(std::size_t n_max) const;

 private:
  Cell build_cell(std::size_t p, std::size_t q) const;
  SparseMatrix row_extra(std::size_t p, std::size_t q) const;
  SparseMatrix col_extra(std::size_t p, std::size_t q) const;

  SmashAlgebra smash_;
  AlgebraPtr sa_;  // the smash product algebra
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Cell>>
      cells_;
  mutable std::map<std::pair<std::size_t, std::size_t>,
                   std::unique_ptr<Subquotient>>
      normalized_;
  mutable std::map<std::size_t, TensorMap> theta_, theta_inv_;
  mutable std::map<std::size_t, TensorMap> gamma_, gamma_inv_;
};

}  // namespace smashhc

#endif
