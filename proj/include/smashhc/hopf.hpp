// Finite-dimensional Hopf algebras, duals, matched pairs, and the double
// crossproduct with its induced R-map.
//
// Sweedler-notation identities are compiled to tensor-contraction pipelines
// over the coproduct matrices; there is no symbolic calculus here.

#ifndef SMASHHC_HOPF_HPP
#define SMASHHC_HOPF_HPP

#include "smashhc/report.hpp"
#include "smashhc/smash.hpp"

namespace smashhc {

class HopfAlgebra {
 public:
  HopfAlgebra(AlgebraPtr alg, TensorMap coproduct, TensorMap counit,
              SparseMatrix antipode);

  const AlgebraPtr& alg() const { return alg_; }
  Index dim() const { return alg_->dim(); }
  const TensorMap& coproduct() const { return coproduct_; }  // H -> H (x) H
  const TensorMap& counit() const { return counit_; }        // H -> k
  const SparseMatrix& antipode() const { return antipode_; }
  const SparseMatrix& antipode_inv() const { return antipode_inv_; }

  // Iterated coproduct H -> H^{(x)(k+1)}, leftmost expansion.
  TensorMap delta_power(std::size_t k) const;

  // Unit as a map k -> H.
  TensorMap unit_map() const;

  // Coassociativity, counit laws, Delta and epsilon algebra maps, antipode
  // axioms, and S S^-1 = id. Also validates the underlying algebra.
  CheckReport check() const;

 private:
  AlgebraPtr alg_;
  TensorMap coproduct_, counit_;
  SparseMatrix antipode_, antipode_inv_;
};

// The dual Hopf algebra with opposite coproduct, in the dual basis.
HopfAlgebra dual_cop(const HopfAlgebra& h);

struct MatchedPair {
  HopfAlgebra B;          // left H-module coalgebra via act_left
  HopfAlgebra H;          // right B-module coalgebra via act_right
  TensorMap act_left;     // (triangle-left)  H (x) B -> B
  TensorMap act_right;    // (triangle-right) H (x) B -> H
  std::string name;
};

// (m1)-(m3) plus the module / module-coalgebra axioms, as matrix identities.
CheckReport check_matched_pair(const MatchedPair& p);

// (m4)-(m5), the inverse-antipode identities.
CheckReport check_inverse_antipode_identities(const MatchedPair& p);

struct DoubleCrossproduct {
  MatchedPair source;
  HopfAlgebra hopf;  // B bowtie H on the basis of B (x) H
  RMap r_map;        // H (x) B -> B (x) H; inverse equals the explicit r formula
};

// Requires check_matched_pair to pass (NotMatched otherwise). The r formula
// from the proof of Prop 5.1 is built independently and compared against the
// matrix inverse of R.
DoubleCrossproduct build_double_crossproduct(const MatchedPair& p);

// The mutual coadjoint matched pair (H^{*cop}, H) behind the Drinfeld double;
// validated on construction.
MatchedPair drinfeld_double_pair(const HopfAlgebra& h, const std::string& name);

}  // namespace smashhc

#endif
