// R-maps and strong smash product algebras: the quasitriangular / normal /
// invertible predicates, inverse transport, Theta/Gamma composites, and the
// construction of A #_R B from structure constants.

#ifndef SMASHHC_SMASH_HPP
#define SMASHHC_SMASH_HPP

#include "smashhc/algebra.hpp"
#include "smashhc/report.hpp"

namespace smashhc {

class HopfAlgebra;  // hopf.hpp

class RMap {
 public:
  // Computes and caches the inverse; throws NotInvertible.
  static RMap from_matrix(AlgebraPtr a, AlgebraPtr b, SparseMatrix forward);
  // Uses a supplied inverse after verifying both compositions.
  static RMap from_maps(AlgebraPtr a, AlgebraPtr b, TensorMap forward,
                        TensorMap inverse);
  static RMap make_flip(AlgebraPtr a, AlgebraPtr b);

  const AlgebraPtr& A() const { return a_; }
  const AlgebraPtr& B() const { return b_; }
  const TensorMap& forward() const { return forward_; }   // B (x) A -> A (x) B
  const TensorMap& inverse() const { return inverse_; }   // A (x) B -> B (x) A

  // Quasitriangularity (both equations), normality (both sides), and the two
  // inverse compositions, each as a matrix identity with witnesses.
  CheckReport check() const;

  // The R-map of B #_{R^-1} A (Prop 1.2 transport).
  RMap swapped() const;

  // Theta_q = R_{q+1,q+2} ... R_23 R_12 : B (x) A^{(q+1)} -> A^{(q+1)} (x) B
  TensorMap theta(std::size_t q) const;
  TensorMap theta_inv(std::size_t q) const;
  // Gamma_p = R^-1_{p+1,p+2} ... R^-1_23 R^-1_12 : A (x) B^{(p+1)} -> B^{(p+1)} (x) A
  TensorMap gamma(std::size_t p) const;
  TensorMap gamma_inv(std::size_t p) const;

 private:
  RMap(AlgebraPtr a, AlgebraPtr b, TensorMap fwd, TensorMap inv);
  AlgebraPtr a_, b_;
  TensorMap forward_, inverse_;
};

// The flip/braid relations (II) for both R and R^-1, plus relation (I) in an
// embedded instance, as literal matrix identities on 3-factor spaces.
CheckReport check_flip_braid(const RMap& r);

class SmashAlgebra {
 public:
  SmashAlgebra(RMap r, AlgebraPtr product);

  const RMap& rmap() const { return r_; }
  const AlgebraPtr& A() const { return r_.A(); }
  const AlgebraPtr& B() const { return r_.B(); }
  // The product algebra on basis {e_i # f_j}, flat index i*dimB + j.
  const AlgebraPtr& algebra() const { return product_; }

 private:
  RMap r_;
  AlgebraPtr product_;
};

// Builds A #_R B with product (a#b)(a'#b') = a R(b(x)a') b' and verifies
// associativity / unitality. check_rmap is mandatory unless skip_rmap_check
// (negative-test bypass) is set.
SmashAlgebra build_smash(const RMap& r, bool skip_rmap_check = false);

// Example 1.5 specialized to B = H with comodule structure Delta:
// R(h (x) a) = (h_(1).a) (x) h_(2), inverse via S^-1. Validates the
// module-algebra axioms first (NotModuleAlgebra with witness).
RMap crossed_product_rmap(const HopfAlgebra& h, const TensorMap& action);

}  // namespace smashhc

#endif
