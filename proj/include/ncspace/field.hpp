#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncspace/bigint.hpp"
#include "ncspace/errors.hpp"
#include "ncspace/intpoly.hpp"

namespace ncspace {

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class Scalar;

// Supported field tower: Q, Q(theta), F_p, F_p(theta) with theta a root of a
// declared monic integer minimal polynomial of degree <= 6. Elements are
// coefficient vectors over the prime field; all arithmetic is exact.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Q, Fp, QExt, FpExt };

  static FieldPtr rationals() { return FieldPtr(new Field(Kind::Q, 0, {})); }
  static FieldPtr prime(long long p) {
    check_prime(p);
    return FieldPtr(new Field(Kind::Fp, p, {}));
  }
  static FieldPtr extension_of_q(const IntPoly& minpoly) {
    return FieldPtr(new Field(Kind::QExt, 0, minpoly));
  }
  static FieldPtr extension_of_fp(long long p, const IntPoly& minpoly) {
    check_prime(p);
    return FieldPtr(new Field(Kind::FpExt, p, minpoly));
  }

  Kind kind() const { return kind_; }
  long long characteristic() const { return p_; }
  bool is_char0() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  int degree() const { return deg_; }
  const IntPoly& minpoly() const { return minpoly_; }

  // number of elements of a finite field; throws for char 0
  BigInt size() const {
    if (!is_finite()) throw Error("Field::size: infinite field");
    return BigInt(p_).pow(static_cast<unsigned long long>(deg_));
  }

  bool same_as(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && minpoly_ == o.minpoly_;
  }

  // ---- element construction ----
  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(const BigInt& n) const;
  Scalar from_rational(const Rational& r) const;
  Scalar from_coeffs(std::vector<Rational> coeffs) const;
  Scalar generator() const;  // theta; error for prime fields

  // named constants bound at construction time ("zeta3" etc.)
  void bind_constant(const std::string& name, const Scalar& value) const;
  bool has_constant(const std::string& name) const {
    return bindings_.count(name) > 0;
  }
  Scalar constant(const std::string& name) const;
  const std::map<std::string, std::vector<Rational>>& bindings() const {
    return bindings_;
  }

  // Deterministically resolve a root of `poly` in this field, or throw
  // ConstantUnresolvable. Finite fields are enumerated; over Q(theta) the
  // search covers rational candidates, theta itself, and small a + b*theta.
  Scalar find_root(const IntPoly& poly) const;

  // enumerate all elements of a finite field in deterministic order
  std::vector<Scalar> enumerate() const;

  // ---- coefficient (prime subfield) arithmetic ----
  Rational cadd(const Rational& a, const Rational& b) const { return creduce(a + b); }
  Rational csub(const Rational& a, const Rational& b) const { return creduce(a - b); }
  Rational cmul(const Rational& a, const Rational& b) const { return creduce(a * b); }
  Rational cneg(const Rational& a) const { return creduce(-a); }
  Rational cinv(const Rational& a) const {
    if (p_ == 0) return a.inverse();
    long long v = creduce(a).num().to_int64();
    if (v == 0) throw Error("division by zero in F_p");
    return Rational(mod_inverse(v, p_));
  }
  // normalize a coefficient into canonical form (integer in [0,p) for char p)
  Rational creduce(const Rational& a) const {
    if (p_ == 0) return a;
    BigInt num = a.num() % BigInt(p_);
    if (num.is_neg()) num += BigInt(p_);
    if (!a.den().is_one()) {
      long long d = (a.den() % BigInt(p_)).to_int64();
      if (d == 0) throw Error("denominator divisible by characteristic");
      BigInt inv(mod_inverse(d, p_));
      num = (num * inv) % BigInt(p_);
    }
    return Rational(num);
  }

  // ---- dense polynomial helpers over the prime field (constant first) ----
  std::vector<Rational> minpoly_coeffs() const {
    std::vector<Rational> m;
    for (const auto& a : minpoly_.c) m.push_back(creduce(Rational(a)));
    return m;
  }
  void reduce_mod_minpoly(std::vector<Rational>& prod) const {
    const int d = deg_;
    auto m = minpoly_coeffs();
    for (size_t i = prod.size(); i-- > static_cast<size_t>(d);) {
      Rational c = prod[i];
      if (c.is_zero()) continue;
      prod[i] = Rational();
      for (int j = 0; j < d; ++j)
        prod[i - d + j] = csub(prod[i - d + j], cmul(c, m[static_cast<size_t>(j)]));
    }
  }
  std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = cadd(r[i + j], cmul(a[i], b[j]));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
  }
  std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const {
    std::vector<Rational> r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = csub(r[i], b[i]);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
  }
  std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
      const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (b.empty()) throw Error("Field::poly_divmod: division by zero");
    std::vector<Rational> r = a, q;
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Rational());
    Rational lead_inv = cinv(b.back());
    while (r.size() >= b.size()) {
      Rational f = cmul(r.back(), lead_inv);
      size_t off = r.size() - b.size();
      q[off] = f;
      for (size_t i = 0; i < b.size(); ++i)
        r[off + i] = csub(r[off + i], cmul(f, b[i]));
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    return {q, r};
  }

  static long long mod_inverse(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw Error("inverse of zero mod p");
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p;
    return t;
  }

  // ---- irreducibility over the prime field (used at construction) ----
  static bool irreducible_mod_p(const IntPoly& f, long long p);
  static bool irreducible_over_q(const IntPoly& f);

 private:
  Kind kind_;
  long long p_;
  IntPoly minpoly_;
  int deg_;
  // mutable so a shared immutable field can have constants attached while the
  // presentation is being built; values never change once bound
  mutable std::map<std::string, std::vector<Rational>> bindings_;

  Field(Kind kind, long long p, IntPoly minpoly)
      : kind_(kind), p_(p), minpoly_(std::move(minpoly)) {
    if (kind_ == Kind::Q || kind_ == Kind::Fp) {
      deg_ = 1;
      return;
    }
    if (minpoly_.degree() < 2 || minpoly_.degree() > 6)
      throw Error("extension degree must be between 2 and 6");
    if (!minpoly_.is_monic())
      throw Error("extension minimal polynomial must be monic");
    deg_ = minpoly_.degree();
    bool irred = (p_ == 0) ? irreducible_over_q(minpoly_)
                           : irreducible_mod_p(minpoly_, p_);
    if (!irred)
      throw Error("extension polynomial is reducible: " + minpoly_.to_string());
  }

  static void check_prime(long long p) {
    if (p < 2) throw Error("characteristic must be 0 or prime");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error("characteristic must be 0 or prime");
  }

  friend class Scalar;
};

// Exact field element: coefficient vector of length Field::degree() over the
// prime field, least significant (theta^0) first.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldPtr f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {
    c_.resize(static_cast<size_t>(field_->degree()), Rational());
    for (auto& x : c_) x = field_->creduce(x);
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (c_.empty() || !c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  // rational value of a degree-one element; error if theta appears
  Rational rational_value() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) throw Error("Scalar: not a prime-field element");
    return c_.empty() ? Rational() : c_[0];
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.field_->cadd(a.c_[i], b.c_[i]);
    return Scalar::raw(a.field_, std::move(r));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.field_->csub(a.c_[i], b.c_[i]);
    return Scalar::raw(a.field_, std::move(r));
  }
  Scalar operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_->cneg(c_[i]);
    return Scalar::raw(field_, std::move(r));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    const int d = a.field_->degree();
    if (d == 1)
      return Scalar::raw(a.field_, {a.field_->cmul(a.c_[0], b.c_[0])});
    std::vector<Rational> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b.c_[j].is_zero()) continue;
        prod[i + j] = a.field_->cadd(prod[i + j], a.field_->cmul(a.c_[i], b.c_[j]));
      }
    }
    a.field_->reduce_mod_minpoly(prod);
    prod.resize(d);
    return Scalar::raw(a.field_, std::move(prod));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw Error("Scalar: inverse of zero");
    const int d = field_->degree();
    if (d == 1) return Scalar::raw(field_, {field_->cinv(c_[0])});
    // extended Euclid on (this, minpoly) over the prime field
    std::vector<Rational> r0 = field_->minpoly_coeffs(), r1 = c_;
    std::vector<Rational> s0, s1{Rational(1)};
    trim(r1);
    while (!r1.empty()) {
      auto [q, rem] = field_->poly_divmod(r0, r1);
      auto s2 = field_->poly_sub(s0, field_->poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 = gcd (a unit since minpoly irreducible); normalize s0 / r0[0]
    if (r0.size() != 1) throw Error("Scalar: inverse failed (non-unit gcd)");
    Rational inv = field_->cinv(r0[0]);
    std::vector<Rational> out(static_cast<size_t>(d));
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i)
      out[i] = field_->cmul(s0[i], inv);
    return Scalar::raw(field_, std::move(out));
  }

  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc = field_->one();
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // canonical text form, e.g. "2", "1/2", "t", "2*t^2 + t + 1"
  std::string to_string(const std::string& theta = "t") const {
    bool all_zero = true;
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      all_zero = false;
      Rational a = c_[i];
      if (!out.empty()) {
        out += (a.sign() < 0) ? " - " : " + ";
        if (a.sign() < 0) a = -a;
      } else if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
      if (i == 0) {
        out += a.to_string();
      } else {
        if (!a.is_one()) out += a.to_string() + "*";
        out += theta;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return all_zero ? "0" : out;
  }

  // numeric image under an embedding theta -> z (char 0 only)
  std::complex<double> embed(const std::complex<double>& theta_image) const {
    std::complex<double> acc(0, 0);
    for (size_t i = c_.size(); i-- > 0;)
      acc = acc * theta_image + std::complex<double>(c_[i].to_double(), 0);
    return acc;
  }

  static Scalar raw(FieldPtr f, std::vector<Rational> c) {
    Scalar s;
    s.field_ = std::move(f);
    s.c_ = std::move(c);
    s.c_.resize(static_cast<size_t>(s.field_->degree()), Rational());
    return s;
  }

  void check_field(const Scalar& o) const {
    if (field_.get() == o.field_.get()) return;
    if (!field_ || !o.field_ || !field_->same_as(*o.field_))
      throw FieldMismatch("scalars from different fields");
  }

 private:
  FieldPtr field_;
  std::vector<Rational> c_;

  static void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  }
};

// ---- Field member implementations that need Scalar ----

inline Scalar Field::zero() const {
  return Scalar::raw(shared_from_this(), {});
}
inline Scalar Field::one() const {
  return Scalar::raw(shared_from_this(), {creduce(Rational(1))});
}
inline Scalar Field::from_int(const BigInt& n) const {
  return Scalar::raw(shared_from_this(), {creduce(Rational(n))});
}
inline Scalar Field::from_rational(const Rational& r) const {
  return Scalar::raw(shared_from_this(), {creduce(r)});
}
inline Scalar Field::from_coeffs(std::vector<Rational> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree())
    throw Error("Field::from_coeffs: too many coefficients");
  for (auto& x : coeffs) x = creduce(x);
  return Scalar::raw(shared_from_this(), std::move(coeffs));
}
inline Scalar Field::generator() const {
  if (deg_ == 1) throw Error("Field::generator: prime field has no generator");
  std::vector<Rational> c(static_cast<size_t>(deg_));
  c[1] = Rational(1);
  return Scalar::raw(shared_from_this(), std::move(c));
}
inline void Field::bind_constant(const std::string& name, const Scalar& value) const {
  bindings_[name] = value.coeffs();
}
inline Scalar Field::constant(const std::string& name) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end())
    throw Error("Field::constant: unbound name " + name);
  return Scalar::raw(shared_from_this(), it->second);
}

namespace detail {
// polynomial helpers over the prime field of `F`, coefficients as Rational
struct FieldPolyOps;
}  // namespace detail

}  // namespace ncspace

// Out-of-class helpers on Field needing full Scalar: declared here to keep the
// header self-contained.
namespace ncspace {

inline std::vector<Scalar> Field::enumerate() const {
  if (!is_finite()) throw Error("Field::enumerate: infinite field");
  BigInt sz = size();
  if (!sz.fits_int64() || sz.to_int64() > 2000000)
    throw TooLarge("Field::enumerate: field too large");
  long long total = sz.to_int64();
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(total));
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    std::vector<Rational> c(static_cast<size_t>(deg_));
    for (int i = 0; i < deg_; ++i) {
      c[static_cast<size_t>(i)] = Rational(rest % p_);
      rest /= p_;
    }
    out.push_back(Scalar::raw(shared_from_this(), std::move(c)));
  }
  return out;
}

namespace detail {
// dense polynomials over F_p as int64 coefficient vectors, constant first
using PmPoly = std::vector<long long>;

inline void pm_trim(PmPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline PmPoly pm_reduce(const IntPoly& f, long long p) {
  PmPoly r;
  for (const auto& a : f.c) {
    BigInt m = a % BigInt(p);
    long long v = m.to_int64();
    if (v < 0) v += p;
    r.push_back(v);
  }
  pm_trim(r);
  return r;
}
inline PmPoly pm_mulmod(const PmPoly& a, const PmPoly& b, const PmPoly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  PmPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<long long>((__int128)a[i] * b[j] % p)) % p;
  }
  // f is monic mod p; reduce r modulo f from the top degree down
  if (r.size() >= f.size()) {
    for (size_t i = r.size() - 1;; --i) {
      if (i + 1 < f.size()) break;
      long long c = r[i];
      if (c) {
        r[i] = 0;
        size_t off = i - (f.size() - 1);
        for (size_t j = 0; j + 1 < f.size(); ++j)
          r[off + j] = ((r[off + j] - (__int128)c * f[j]) % p + p) % p;
      }
      if (i == 0) break;
    }
  }
  pm_trim(r);
  return r;
}
inline PmPoly pm_powmod(PmPoly base, unsigned long long e, const PmPoly& f, long long p) {
  PmPoly acc{1};
  while (e) {
    if (e & 1) acc = pm_mulmod(acc, base, f, p);
    base = pm_mulmod(base, base, f, p);
    e >>= 1;
  }
  return acc;
}
inline PmPoly pm_gcd(PmPoly a, PmPoly b, long long p) {
  pm_trim(a);
  pm_trim(b);
  while (!b.empty()) {
    // a mod b
    long long inv = Field::mod_inverse(b.back(), p);
    PmPoly r = a;
    while (r.size() >= b.size()) {
      long long fac = static_cast<long long>((__int128)r.back() * inv % p);
      size_t off = r.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        r[off + i] = ((r[off + i] - (__int128)fac * b[i]) % p + p) % p;
      pm_trim(r);
      if (r.size() < b.size()) break;
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}
}  // namespace detail

inline bool Field::irreducible_mod_p(const IntPoly& f, long long p) {
  using namespace detail;
  if (p > 2000000) throw Unsupported("irreducibility check: characteristic too large");
  PmPoly fm = pm_reduce(f, p);
  int n = static_cast<int>(fm.size()) - 1;
  if (n < static_cast<int>(f.c.size()) - 1) return false;  // degree dropped
  if (n <= 0) return false;
  if (n == 1) return true;
  // f has no irreducible factor of degree <= n/2 iff gcd(x^{p^i} - x, f) = 1
  PmPoly x{0, 1};
  for (int i = 1; i <= n / 2; ++i) {
    unsigned long long e = 1;
    for (int k = 0; k < i; ++k) e *= static_cast<unsigned long long>(p);
    PmPoly xp = pm_powmod(x, e, fm, p);
    // xp - x
    PmPoly g = xp;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    pm_trim(g);
    PmPoly d = pm_gcd(fm, g, p);
    if (d.size() > 1) return false;
  }
  return true;
}

inline bool Field::irreducible_over_q(const IntPoly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // monic integer polynomial: rational roots are integer divisors of the
  // constant term
  if (f.c.front().is_zero()) return false;
  BigInt a0 = f.c.front().abs();
  if (a0.fits_int64() && a0.to_int64() <= 4000000) {
    long long a0v = a0.to_int64();
    for (long long d = 1; d * d <= a0v; ++d) {
      if (a0v % d) continue;
      for (long long cand : {d, a0v / d}) {
        if (f.eval(Rational(cand)).is_zero()) return false;
        if (f.eval(Rational(-cand)).is_zero()) return false;
      }
    }
  } else {
    throw Unsupported("irreducibility check: constant term too large");
  }
  if (n <= 3) return true;  // cubic+below with no rational root
  // a monic poly irreducible mod some prime is irreducible over Q
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    if (irreducible_mod_p(f, p)) return true;
  // fallback: bounded trial division by monic integer divisors (Gauss lemma)
  double bound_d = std::pow(2.0, n) * (1.0 + f.l1_norm());
  if (bound_d > 2000) throw Unsupported("irreducibility check: bound too large");
  long long B = static_cast<long long>(bound_d);
  auto divides = [&](const IntPoly& g) {
    // exact division over Q
    std::vector<Rational> fa, ga;
    for (const auto& c : f.c) fa.emplace_back(c);
    for (const auto& c : g.c) ga.emplace_back(c);
    std::vector<Rational> rem = fa;
    while (rem.size() >= ga.size() && !rem.empty()) {
      Rational fac = rem.back() / ga.back();
      size_t off = rem.size() - ga.size();
      for (size_t i = 0; i < ga.size(); ++i) rem[off + i] -= fac * ga[i];
      while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
      if (rem.size() < ga.size()) break;
    }
    return rem.empty();
  };
  for (int dg = 2; dg <= n / 2; ++dg) {
    std::vector<long long> coef(static_cast<size_t>(dg), -B);
    while (true) {
      IntPoly g;
      for (auto v : coef) g.c.push_back(BigInt(v));
      g.c.push_back(BigInt(1));
      g.trim();
      if (divides(g)) return false;
      int i = 0;
      for (; i < dg; ++i) {
        if (coef[static_cast<size_t>(i)] < B) {
          ++coef[static_cast<size_t>(i)];
          break;
        }
        coef[static_cast<size_t>(i)] = -B;
      }
      if (i == dg) break;
    }
  }
  return true;
}

inline Scalar Field::find_root(const IntPoly& poly) const {
  auto eval_at = [&](const Scalar& x) {
    Scalar acc = zero();
    for (size_t i = poly.c.size(); i-- > 0;) acc = acc * x + from_int(poly.c[i]);
    return acc;
  };
  if (is_finite()) {
    for (const auto& x : enumerate())
      if (eval_at(x).is_zero()) return x;
    throw ConstantUnresolvable("no root of " + poly.to_string() + " in this field");
  }
  // rational candidates via the rational root theorem
  if (!poly.is_zero()) {
    if (poly.c.front().is_zero()) return zero();
    BigInt a0 = poly.c.front().abs(), an = poly.leading().abs();
    if (!a0.fits_int64() || a0.to_int64() > 1000000 || !an.fits_int64() ||
        an.to_int64() > 1000000)
      throw Unsupported("find_root: coefficients out of desk range");
    for (BigInt p(1); p <= a0; p += 1) {
      if (!(a0 % p).is_zero()) continue;
      for (BigInt q(1); q <= an; q += 1) {
        if (!(an % q).is_zero()) continue;
        for (int sgn : {1, -1}) {
          Rational cand(sgn < 0 ? -p : p, q);
          if (poly.eval(cand).is_zero()) return from_rational(cand);
        }
      }
    }
  }
  if (deg_ > 1) {
    if (poly == minpoly_) return generator();
    // small search over a + b*theta
    for (long long b = -3; b <= 3; ++b)
      for (long long a = -3; a <= 3; ++a) {
        if (b == 0) continue;
        std::vector<Rational> c(static_cast<size_t>(deg_));
        c[0] = Rational(a);
        c[1] = Rational(b);
        Scalar x = Scalar::raw(shared_from_this(), std::move(c));
        if (eval_at(x).is_zero()) return x;
      }
  }
  throw ConstantUnresolvable("no root of " + poly.to_string() + " in this field");
}

}  // namespace ncspace
