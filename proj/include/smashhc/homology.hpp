// Exact homology of chain complexes and mixed complexes, including the
// W-coefficient cyclic homologies for the two desk-computable coefficient
// modules: W = k[u]/uk[u] (Hochschild) and W = k[u,u^-1]/uk[u] (cyclic).
//
// Truncation policy: a table computed from data materialized up to level L
// reports degrees 0..L and flags degrees L-1 and L; only unflagged degrees
// are exact. Flagged values are still computed from the available maps.

#ifndef SMASHHC_HOMOLOGY_HPP
#define SMASHHC_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "smashhc/cyclic.hpp"

namespace smashhc {

struct ChainComplex {
  std::string name;
  std::vector<Index> dims;         // degrees 0..K
  std::vector<SparseMatrix> d;     // d[n]: n -> n-1, valid for 1..K

  std::size_t top() const { return dims.size() - 1; }
  void validate() const;  // shapes and d d = 0; throws NotAComplex
};

struct HomologyTable {
  std::string name;
  std::vector<Index> dims;
  std::vector<bool> flagged;

  std::size_t top() const { return dims.size() - 1; }
  bool agrees_on_unflagged(const HomologyTable& o) const;
  std::string str() const;
};

// dim H_n = dim ker d_n - rank d_{n+1}; flags per the truncation policy
// unless the complex is marked complete (no missing top differential).
HomologyTable homology_dims(const ChainComplex& cc, bool complete = false);

enum class CoefficientW { hochschild, cyclic };

// Accepts "hochschild" and "cyclic"; the infinite-dimensional coefficient
// modules W = k[u] (negative) and W = k[u,u^-1] (periodic) are rejected with
// Unsupported.
CoefficientW parse_coefficient_w(const std::string& name);
std::string coefficient_w_name(CoefficientW w);

// The finite-per-degree complex M (x)_{k[u]} W. For the cyclic W the degree-n
// component is the direct sum of M_{n-2j} u^{-j}, j >= 0.
ChainComplex boxtimes_complex(const MixedComplex& mc, CoefficientW w);

HomologyTable cyclic_homology(const MixedComplex& mc, CoefficientW w);

// Hochschild dims from the b-complex of any paracyclic module.
HomologyTable hochschild_dims(const ParacyclicModule& pm);

// Connes lambda-quotient oracle: homology of C_n / im(1 - (-1)^n t) with the
// induced b. Requires genuine cyclicity (NotCyclic otherwise).
HomologyTable connes_lambda_dims(const ParacyclicModule& cm);

// Dimension-level consistency of HH and HC tables against the SBI sequence.
CheckReport sbi_consistency(const HomologyTable& hh, const HomologyTable& hc);

}  // namespace smashhc

#endif
