#include "smashhc/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "smashhc/errors.hpp"

namespace smashhc {

namespace {

// Dense polynomial helpers over Q, coefficient vectors low-degree-first.

void poly_trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

// Quotient of exact division (throws if a remainder is left over).
std::vector<Rat> poly_divexact(std::vector<Rat> num, const std::vector<Rat>& den) {
  poly_trim(num);
  if (den.empty()) throw std::domain_error("poly_divexact: zero divisor");
  std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                     Rat(0));
  while (num.size() >= den.size()) {
    std::size_t shift = num.size() - den.size();
    Rat c = num.back() / den.back();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  if (!num.empty()) throw std::domain_error("poly_divexact: nonzero remainder");
  return q;
}

std::vector<Rat> poly_mod(std::vector<Rat> num, const std::vector<Rat>& den) {
  poly_trim(num);
  while (num.size() >= den.size()) {
    std::size_t shift = num.size() - den.size();
    Rat c = num.back() / den.back();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    poly_trim(num);
  }
  return num;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Phi_N via Phi_1 = x - 1 and (x^N - 1) = prod_{d | N} Phi_d.
std::vector<Rat> cyclotomic_poly(unsigned n) {
  std::vector<Rat> p(n + 1, Rat(0));
  p[0] = Rat(-1);
  p[n] = Rat(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_divexact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a + v*Phi = g, g monic.
struct XgcdResult {
  std::vector<Rat> g, u;
};

XgcdResult poly_xgcd(std::vector<Rat> a, std::vector<Rat> b) {
  poly_trim(a);
  poly_trim(b);
  std::vector<Rat> r0 = a, r1 = b;
  std::vector<Rat> u0{Rat(1)}, u1{};
  while (!r1.empty()) {
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                       Rat(0));
    std::vector<Rat> r2 = r0;
    while (r2.size() >= r1.size() && !r2.empty()) {
      std::size_t shift = r2.size() - r1.size();
      Rat c = r2.back() / r1.back();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
      poly_trim(r2);
    }
    std::vector<Rat> u2 = u0;
    {
      std::vector<Rat> qu = poly_mul(q, u1);
      if (u2.size() < qu.size()) u2.resize(qu.size(), Rat(0));
      for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
      poly_trim(u2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!r0.empty() && !r0.back().is_one()) {
    Rat lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
  }
  return {std::move(r0), std::move(u0)};
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  modulus_ = cyclotomic_poly(order);
  std::size_t phi = modulus_.size() - 1;
  if (phi != euler_phi(order))
    throw std::logic_error("cyclotomic polynomial degree mismatch");
  // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}); extend by
  // multiplying through with zeta and re-reducing.
  powers_.resize(phi >= 1 ? phi - 1 : 0);
  std::vector<Rat> cur(phi, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) cur[i] = -modulus_[i];
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    powers_[k] = cur;
    std::vector<Rat> next(phi, Rat(0));
    Rat top = cur[phi - 1];
    for (std::size_t i = phi - 1; i >= 1; --i) next[i] = cur[i - 1];
    if (!top.is_zero())
      for (std::size_t i = 0; i < phi; ++i) next[i] -= top * modulus_[i];
    cur = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned order) {
  if (order < 2 || order > 64)
    throw UnsupportedField("cyclotomic order " + std::to_string(order) +
                           " outside supported range [2, 64]");
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
  cache[order] = field;
  return field;
}

Scalar::Scalar(const Scalar& o) : rat_(o.rat_) {
  if (o.cyc_) cyc_ = std::make_unique<Cyc>(*o.cyc_);
}

Scalar& Scalar::operator=(const Scalar& o) {
  if (this == &o) return *this;
  rat_ = o.rat_;
  cyc_ = o.cyc_ ? std::make_unique<Cyc>(*o.cyc_) : nullptr;
  return *this;
}

Scalar::Scalar(const Rat& r, const FieldPtr& field) : rat_(r) {
  if (field) {
    cyc_ = std::make_unique<Cyc>();
    cyc_->field = field;
    cyc_->coeffs.assign(field->degree(), Rat(0));
    cyc_->coeffs[0] = r;
    normalize();
  }
}

Scalar::Scalar(const FieldPtr& field, std::vector<Rat> coeffs) : rat_(0) {
  if (!field) throw FieldMismatch("cyclotomic scalar requires a field");
  if (coeffs.size() != field->degree())
    throw DimensionMismatch("cyclotomic coefficient vector has wrong length");
  cyc_ = std::make_unique<Cyc>();
  cyc_->field = field;
  cyc_->coeffs = std::move(coeffs);
  normalize();
}

Scalar Scalar::zeta(unsigned order, long long power) {
  auto field = CyclotomicField::get(order);
  long long p = ((power % order) + order) % order;
  std::size_t phi = field->degree();
  if (static_cast<std::size_t>(p) < phi) {
    std::vector<Rat> coeffs(phi, Rat(0));
    coeffs[p] = Rat(1);
    return Scalar(field, std::move(coeffs));
  }
  Scalar base;
  if (phi > 1) {
    std::vector<Rat> coeffs(phi, Rat(0));
    coeffs[1] = Rat(1);
    base = Scalar(field, std::move(coeffs));
  } else {
    // degree-1 field: zeta = -c_0 of the (monic linear) modulus
    base = Scalar(-field->modulus()[0]);
  }
  Scalar acc(1);
  for (long long k = 0; k < p; ++k) acc *= base;
  return acc;
}

void Scalar::normalize() {
  if (!cyc_) return;
  for (std::size_t i = 1; i < cyc_->coeffs.size(); ++i)
    if (!cyc_->coeffs[i].is_zero()) return;
  rat_ = cyc_->coeffs.empty() ? Rat(0) : cyc_->coeffs[0];
  cyc_.reset();
}

unsigned Scalar::field_order() const {
  return cyc_ ? cyc_->field->order() : 1;
}

FieldPtr Scalar::field() const { return cyc_ ? cyc_->field : nullptr; }

const Rat& Scalar::rational_value() const {
  if (cyc_) throw FieldMismatch("scalar is not rational");
  return rat_;
}

const std::vector<Rat>& Scalar::coeffs() const {
  if (!cyc_) throw FieldMismatch("scalar is rational; no coefficient vector");
  return cyc_->coeffs;
}

namespace {

struct Aligned {
  FieldPtr field;
  std::vector<Rat> a, b;
};

Aligned align(const Scalar& x, const Scalar& y) {
  FieldPtr fx = x.field();
  FieldPtr fy = y.field();
  if (fx && fy && fx->order() != fy->order())
    throw FieldMismatch("cannot mix Q(zeta_" + std::to_string(fx->order()) +
                        ") with Q(zeta_" + std::to_string(fy->order()) + ")");
  FieldPtr f = fx ? fx : fy;
  Aligned out;
  out.field = f;
  if (!f) return out;
  std::size_t phi = f->degree();
  out.a.assign(phi, Rat(0));
  out.b.assign(phi, Rat(0));
  if (fx)
    out.a = x.coeffs();
  else
    out.a[0] = x.rational_value();
  if (fy)
    out.b = y.coeffs();
  else
    out.b[0] = y.rational_value();
  return out;
}

}  // namespace

Scalar Scalar::operator-() const {
  if (!cyc_) return Scalar(-rat_);
  std::vector<Rat> c(cyc_->coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -cyc_->coeffs[i];
  return Scalar(cyc_->field, std::move(c));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!cyc_ && !o.cyc_) {
    rat_ += o.rat_;
    return *this;
  }
  Aligned al = align(*this, o);
  for (std::size_t i = 0; i < al.a.size(); ++i) al.a[i] += al.b[i];
  *this = Scalar(al.field, std::move(al.a));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!cyc_ && !o.cyc_) {
    rat_ *= o.rat_;
    return *this;
  }
  if (!cyc_ || !o.cyc_) {
    // rational times cyclotomic: scale the coefficient vector
    const Scalar& c = cyc_ ? *this : o;
    const Rat& r = cyc_ ? o.rat_ : rat_;
    if (r.is_zero()) {
      *this = Scalar(Rat(0));
      return *this;
    }
    std::vector<Rat> cv = c.cyc_->coeffs;
    for (auto& ci : cv) ci *= r;
    *this = Scalar(c.cyc_->field, std::move(cv));
    return *this;
  }
  Aligned al = align(*this, o);
  std::size_t phi = al.field->degree();
  std::vector<Rat> prod(2 * phi - 1, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (al.a[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (al.b[j].is_zero()) continue;
      prod[i + j] += al.a[i] * al.b[j];
    }
  }
  std::vector<Rat> red(prod.begin(), prod.begin() + phi);
  const auto& table = al.field->power_table();
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& pw = table[k - phi];
    for (std::size_t i = 0; i < phi; ++i) red[i] += prod[k] * pw[i];
  }
  *this = Scalar(al.field, std::move(red));
  return *this;
}

Scalar Scalar::inverse() const {
  if (!cyc_) return Scalar(rat_.inverse());
  // Extended Euclid against Phi_N; gcd is 1 since Phi_N is irreducible over Q.
  std::vector<Rat> a = cyc_->coeffs;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  auto res = poly_xgcd(a, cyc_->field->modulus());
  if (res.g.size() != 1)
    throw NotInvertible("cyclotomic inverse: unexpected gcd degree");
  std::vector<Rat> u = poly_mod(std::move(res.u), cyc_->field->modulus());
  u.resize(cyc_->field->degree(), Rat(0));
  return Scalar(cyc_->field, std::move(u));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!cyc_ && !o.cyc_) return rat_ == o.rat_;
  if (static_cast<bool>(cyc_) != static_cast<bool>(o.cyc_)) return false;
  if (cyc_->field->order() != o.cyc_->field->order()) return false;
  return cyc_->coeffs == o.cyc_->coeffs;
}

std::string Scalar::str() const {
  if (!cyc_) return rat_.str();
  std::ostringstream out;
  out << "zeta" << cyc_->field->order() << "[";
  for (std::size_t i = 0; i < cyc_->coeffs.size(); ++i) {
    if (i) out << ",";
    out << cyc_->coeffs[i].str();
  }
  out << "]";
  return out.str();
}

}  // namespace smashhc
