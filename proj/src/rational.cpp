#include "smashhc/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace smashhc {

namespace {

using int128 = __int128;

long long llgcd(long long a, long long b) {
  unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                : static_cast<unsigned long long>(a);
  unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                : static_cast<unsigned long long>(b);
  return static_cast<long long>(std::gcd(ua, ub));
}

int128 i128gcd(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr int128 kI64Min = static_cast<int128>(INT64_MIN);
constexpr int128 kI64Max = static_cast<int128>(INT64_MAX);

bool fits64(int128 v) { return v >= kI64Min && v <= kI64Max; }

mpz_class mpz_of_i128(int128 v) {
  bool neg = v < 0;
  unsigned __int128 uv = neg ? -static_cast<unsigned __int128>(v)
                             : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(uv >> 64));
  mpz_class lo(static_cast<unsigned long>(uv & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = llgcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

void Rat::assign_mpq(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 0;
    big_ = std::make_shared<const mpq_class>(q);
  }
}

Rat Rat::from_mpq(const mpq_class& q) {
  Rat r;
  r.assign_mpq(q);
  return r;
}

bool Rat::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
  q.canonicalize();
  return q;
}

Rat Rat::operator-() const {
  if (big_) return from_mpq(mpq_class(-*big_));
  if (num_ == INT64_MIN) return from_mpq(-to_mpq());
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    // a/b + c/d = (ad + cb)/(bd), exact in 128-bit, then reduced.
    int128 n = static_cast<int128>(num_) * o.den_ +
               static_cast<int128>(o.num_) * den_;
    int128 d = static_cast<int128>(den_) * o.den_;
    int128 g = i128gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    mpq_class q(mpz_of_i128(n), mpz_of_i128(d));
    q.canonicalize();
    assign_mpq(q);
    return *this;
  }
  assign_mpq(mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    // Cross-reduce before multiplying to keep intermediates small.
    long long g1 = llgcd(num_, o.den_);
    long long g2 = llgcd(o.num_, den_);
    int128 n = static_cast<int128>(num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1));
    int128 d = static_cast<int128>(den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1));
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    mpq_class q(mpz_of_i128(n), mpz_of_i128(d));
    q.canonicalize();
    assign_mpq(q);
    return *this;
  }
  assign_mpq(mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  return *this *= o.inverse();
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  if (big_) {
    mpq_class q(1 / *big_);
    return from_mpq(q);
  }
  Rat r;
  if (num_ < 0) {
    if (num_ == INT64_MIN) return from_mpq(mpq_class(1) / to_mpq());
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

bool Rat::operator==(const Rat& o) const {
  if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
  return mpq_cmp(to_mpq().get_mpq_t(), o.to_mpq().get_mpq_t()) == 0;
}

int Rat::compare(const Rat& o) const {
  if (!big_ && !o.big_) {
    int128 l = static_cast<int128>(num_) * o.den_;
    int128 r = static_cast<int128>(o.num_) * den_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return mpq_cmp(to_mpq().get_mpq_t(), o.to_mpq().get_mpq_t());
}

std::string Rat::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      return std::nullopt;
  }
  try {
    mpq_class q(s);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return from_mpq(q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace smashhc
