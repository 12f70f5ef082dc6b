// JSON serialization: exact scalars, sparse matrices, algebra / Hopf / smash
// descriptors, check reports, homology tables, spectral pages.
//
// Scalars serialize as strings "p/q" (the "/q" omitted when q = 1);
// cyclotomic scalars as {"order": N, "coeffs": [...]} in the power basis.
// The mixed-radix basis convention (leftmost factor most significant) is
// frozen by these formats.

#ifndef SMASHHC_JSON_IO_HPP
#define SMASHHC_JSON_IO_HPP

#include <json.hpp>

#include "smashhc/homology.hpp"
#include "smashhc/hopf.hpp"
#include "smashhc/report.hpp"
#include "smashhc/spectral.hpp"

namespace smashhc {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

Json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j);

Json algebra_to_json(const FinDimAlgebra& a);
AlgebraPtr algebra_from_json(const nlohmann::json& j);

Json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const nlohmann::json& j);

Json report_to_json(const CheckReport& rep);
std::string report_to_csv(const CheckReport& rep);

Json table_to_json(const HomologyTable& t);
std::string table_to_csv(const HomologyTable& t);

Json spectral_to_json(const SpectralSequence& ss);
std::string spectral_to_csv(const SpectralSequence& ss);

}  // namespace smashhc

#endif
