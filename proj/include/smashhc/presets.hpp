// The example zoo: every finite-dimensional concrete object from the worked
// examples, each validated against its full axiom suite at construction, plus
// the dual-numbers small-resolution homology oracle.

#ifndef SMASHHC_PRESETS_HPP
#define SMASHHC_PRESETS_HPP

#include <optional>

#include "smashhc/homology.hpp"
#include "smashhc/hopf.hpp"
#include "smashhc/smash.hpp"

namespace smashhc::presets {

// Plain algebras ------------------------------------------------------------

AlgebraPtr dual_numbers();                       // D = k[s]/s^2
AlgebraPtr cyclic_group_algebra(unsigned n);     // k[Z/n], basis 1, g, ...
AlgebraPtr truncated_poly_algebra(unsigned n);   // k[x]/(x^n - 1), basis x^i

// Hopf algebras --------------------------------------------------------------

HopfAlgebra cyclic_group_hopf(unsigned n);
// dim n^2 algebra on sigma, partial with sigma^n = 1, partial^n = 0,
// sigma^-1 partial sigma = q partial at q = zeta_n. taft(2) is Sweedler's H4.
HopfAlgebra taft(unsigned n);
HopfAlgebra sweedler();

// Matched pairs and doubles ---------------------------------------------------

MatchedPair trivial_matched_pair(const HopfAlgebra& b, const HopfAlgebra& h);
MatchedPair bismash_z2_z2_pair();
DoubleCrossproduct drinfeld_double_sweedler();

// Smash products ---------------------------------------------------------------

SmashAlgebra tensor_flip(const AlgebraPtr& a, const AlgebraPtr& b);
// q-root-of-unity module algebra: A = k[x]/(x^N - 1) crossed with taft(N).
SmashAlgebra module_algebra_5_2(unsigned n);
// Finite surrogate for the Pareigis algebra: D crossed with k[Z/2M],
// R(t^r (x) s) = (-1)^r (s (x) t^r).
SmashAlgebra pareigis_surrogate(unsigned m);

// The action matrix used by module_algebra_5_2 (exposed for oracle tests):
// partial . x^n = (n)_q x^{n-1}, sigma . x^n = q^n x^n.
TensorMap module_algebra_5_2_action(unsigned n);

// Catalog ---------------------------------------------------------------------

struct Preset {
  std::string name;
  std::optional<SmashAlgebra> smash;
  std::optional<HopfAlgebra> hopf;
  std::optional<MatchedPair> pair;
  std::shared_ptr<const DoubleCrossproduct> double_xp;
  AlgebraPtr plain;
  bool a_separable = false;  // A is a group algebra over char 0
  bool b_separable = false;
};

// Accepts "dual_numbers", "cyclic_group(N)", "sweedler", "taft(N)",
// "module_algebra_5_2(N)", "pareigis_surrogate(M)", "bismash",
// "drinfeld_double_sweedler", "tensor_flip(X,Y)" with X, Y in
// {K2, K3, K4, D}. Throws UnknownPreset / UnsupportedField.
Preset get_preset(const std::string& name);
std::vector<std::string> preset_names();

// H_q(M) of the 2-periodic complex ... -> M -(nu)-> M -(mu)-> M -> 0 with
// mu(m) = ms - sm and nu(m) = ms + sm, for a D-bimodule given by commuting
// left/right action matrices of s. Independent Hochschild oracle.
HomologyTable dual_numbers_resolution_homology(const SparseMatrix& left_s,
                                               const SparseMatrix& right_s,
                                               std::size_t q_max);

}  // namespace smashhc::presets

#endif
