// Exact scalars: elements of Q or of a cyclotomic field Q(zeta_N), the latter
// represented by coefficient vectors of length phi(N) in the power basis of
// zeta_N, reduced modulo the N-th cyclotomic polynomial.
//
// Q embeds into every Q(zeta_N); mixing two distinct cyclotomic orders in one
// operation throws FieldMismatch (field towers are not supported). A
// cyclotomic value whose higher coefficients all vanish normalizes back to
// rational form, so equality and zero tests are canonical across fields.

#ifndef SMASHHC_SCALAR_HPP
#define SMASHHC_SCALAR_HPP

#include <memory>
#include <string>
#include <vector>

#include "smashhc/rational.hpp"

namespace smashhc {

class CyclotomicField {
 public:
  // Registry access; fields are immutable and shared. N in [2, 64].
  static std::shared_ptr<const CyclotomicField> get(unsigned order);

  unsigned order() const { return order_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  // Monic Phi_N as coefficient vector c_0..c_phi (c_phi = 1).
  const std::vector<Rat>& modulus() const { return modulus_; }
  // zeta^k for k in [phi, 2*phi-2], reduced to the power basis.
  const std::vector<std::vector<Rat>>& power_table() const { return powers_; }

 private:
  explicit CyclotomicField(unsigned order);
  unsigned order_;
  std::vector<Rat> modulus_;
  std::vector<std::vector<Rat>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class Scalar {
 public:
  Scalar() : rat_(0) {}
  Scalar(long long n) : rat_(n) {}
  Scalar(const Rat& r) : rat_(r) {}
  Scalar(const Rat& r, const FieldPtr& field);        // embed a rational
  Scalar(const FieldPtr& field, std::vector<Rat> coeffs);

  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;

  static Scalar zeta(unsigned order, long long power = 1);

  bool is_rational() const { return cyc_ == nullptr; }
  // 1 for Q, N for Q(zeta_N).
  unsigned field_order() const;
  FieldPtr field() const;

  bool is_zero() const { return !cyc_ && rat_.is_zero(); }
  bool is_one() const { return !cyc_ && rat_.is_one(); }

  const Rat& rational_value() const;        // throws unless rational-valued
  const std::vector<Rat>& coeffs() const;   // cyclotomic representation

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  std::string str() const;

 private:
  struct Cyc {
    FieldPtr field;
    std::vector<Rat> coeffs;  // size phi(N)
  };

  void normalize();  // drop to rational form when all high coeffs vanish

  Rat rat_;                    // value when cyc_ == nullptr
  std::unique_ptr<Cyc> cyc_;   // cyclotomic payload, deep-copied
};

}  // namespace smashhc

#endif
