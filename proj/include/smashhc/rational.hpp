// Exact rational arithmetic with a machine-word fast path.
//
// Values are kept canonical at all times: denominator > 0, gcd(|num|, den) = 1.
// Small values live inline as int64 pairs; anything that overflows is promoted
// to a GMP rational behind a shared immutable pointer.

#ifndef SMASHHC_RATIONAL_HPP
#define SMASHHC_RATIONAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace smashhc {

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q) { assign_mpq(q); }

  static std::optional<Rat> parse(std::string_view text);

  bool is_zero() const { return big_ ? false : num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_big() const { return static_cast<bool>(big_); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }

  Rat inverse() const;

  // Total order (used only for canonical serialization and tests).
  int compare(const Rat& o) const;
  bool operator<(const Rat& o) const { return compare(o) < 0; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  mpq_class to_mpq() const;

 private:
  void assign_mpq(const mpq_class& q);
  static Rat from_mpq(const mpq_class& q);

  // Inline value num_/den_ when big_ is null; otherwise *big_ holds the value.
  long long num_;
  long long den_;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace smashhc

#endif
