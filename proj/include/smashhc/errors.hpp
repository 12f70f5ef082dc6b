// Typed error hierarchy. Every failure mode named by a module contract gets
// its own exception type so callers and tests can match on it.

#ifndef SMASHHC_ERRORS_HPP
#define SMASHHC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smashhc {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SMASHHC_DEFINE_ERROR(NAME)                                 \
  class NAME : public Error {                                      \
   public:                                                         \
    explicit NAME(const std::string& what) : Error(#NAME, what) {} \
  }

SMASHHC_DEFINE_ERROR(DimensionMismatch);
SMASHHC_DEFINE_ERROR(FieldMismatch);
SMASHHC_DEFINE_ERROR(UnsupportedField);
SMASHHC_DEFINE_ERROR(ContainmentViolation);
SMASHHC_DEFINE_ERROR(NotWellDefined);
SMASHHC_DEFINE_ERROR(NotInvertible);
SMASHHC_DEFINE_ERROR(AxiomViolation);
SMASHHC_DEFINE_ERROR(NotMatched);
SMASHHC_DEFINE_ERROR(NotModuleAlgebra);
SMASHHC_DEFINE_ERROR(NotAComplex);
SMASHHC_DEFINE_ERROR(NotMixed);
SMASHHC_DEFINE_ERROR(NotCyclic);
SMASHHC_DEFINE_ERROR(WrongAlgebra);
SMASHHC_DEFINE_ERROR(UnknownPreset);
SMASHHC_DEFINE_ERROR(Unsupported);
SMASHHC_DEFINE_ERROR(TruncationTooSmall);
SMASHHC_DEFINE_ERROR(IntertwinerViolation);
SMASHHC_DEFINE_ERROR(InputError);

#undef SMASHHC_DEFINE_ERROR

}  // namespace smashhc

#endif
