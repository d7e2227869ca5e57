#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ncspace/errors.hpp"

namespace ncspace {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
// Sized for desk-scale exact linear algebra, not for cryptography.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v < 0) {
      sgn_ = -1;
      unsigned long long m = ~static_cast<unsigned long long>(v) + 1ULL;
      push_u64(m);
    } else if (v > 0) {
      sgn_ = 1;
      push_u64(static_cast<unsigned long long>(v));
    }
  }

  static BigInt from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sgn = 1;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-') sgn = -1;
      ++i;
    }
    if (i >= s.size()) throw Error("BigInt: empty literal");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error("BigInt: bad digit in literal");
      r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
    }
    r.sgn_ = r.mag_.empty() ? 0 : sgn;
    return r;
  }

  bool is_zero() const { return sgn_ == 0; }
  bool is_one() const { return sgn_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool is_neg() const { return sgn_ < 0; }
  int sign() const { return sgn_; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = to_u64_unchecked();
    if (sgn_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_int64() const {
    if (!fits_int64()) throw Error("BigInt: does not fit in int64");
    unsigned long long m = to_u64_unchecked();
    return sgn_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
  }

  double to_double() const {
    double v = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sgn_ < 0 ? -v : v;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sgn_ < 0) r.sgn_ = 1;
    return r;
  }
  BigInt operator-() const {
    BigInt r = *this;
    r.sgn_ = -r.sgn_;
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sgn_ == b.sgn_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sgn_ != b.sgn_) return a.sgn_ < b.sgn_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sgn_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sgn_ == 0) return b;
    if (b.sgn_ == 0) return a;
    BigInt r;
    if (a.sgn_ == b.sgn_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sgn_ = a.sgn_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sgn_ = a.sgn_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sgn_ = b.sgn_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sgn_ == 0 || b.sgn_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      unsigned long long carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        unsigned long long cur = r.mag_[i + j] +
                                 static_cast<unsigned long long>(a.mag_[i]) * b.mag_[j] +
                                 carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry) {
        unsigned long long cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sgn_ = a.sgn_ * b.sgn_;
    return r;
  }

  // Truncated division (quotient rounds toward zero), remainder has the
  // dividend's sign. divmod(a,b) satisfies a = q*b + r with |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sgn_ == 0) throw Error("BigInt: division by zero");
    if (cmp_mag(a.mag_, b.mag_) < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.trim();
    q.sgn_ = q.mag_.empty() ? 0 : a.sgn_ * b.sgn_;
    r.mag_ = std::move(rm);
    r.trim();
    r.sgn_ = r.mag_.empty() ? 0 : a.sgn_;
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sgn_ = a.mag_.empty() ? 0 : 1;
    b.sgn_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a;
  }

  BigInt pow(unsigned long long e) const {
    BigInt base = *this, acc = 1;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    if (sgn_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      unsigned long long rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        unsigned long long cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sgn_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

  size_t limbs() const { return mag_.size(); }

 private:
  int sgn_ = 0;
  std::vector<uint32_t> mag_;

  void push_u64(unsigned long long m) {
    mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }
  unsigned long long to_u64_unchecked() const {
    unsigned long long m = 0;
    if (mag_.size() > 1) m = static_cast<unsigned long long>(mag_[1]) << 32;
    if (!mag_.empty()) m |= mag_[0];
    return m;
  }
  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sgn_ = 0;
  }
  void mul_small_add(uint32_t mul, uint32_t add) {
    unsigned long long carry = add;
    for (auto& limb : mag_) {
      unsigned long long cur = static_cast<unsigned long long>(limb) * mul + carry;
      limb = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      mag_.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
    if (!mag_.empty()) sgn_ = 1;
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      unsigned long long cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    long long borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      long long cur = static_cast<long long>(r[i]) - borrow -
                      (i < b.size() ? static_cast<long long>(b[i]) : 0);
      if (cur < 0) {
        cur += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on normalized magnitudes; returns |a| = q*|b| + r.
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      unsigned long long rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        unsigned long long cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    int shift = 0;
    uint32_t top = b.back();
    while ((top & 0x80000000u) == 0) {
      top <<= 1;
      ++shift;
    }
    std::vector<uint32_t> u = shl_bits(a, shift);
    std::vector<uint32_t> v = shl_bits(b, shift);
    size_t n = v.size();
    size_t m = a.size() - n;  // |a| >= |b| here, so m >= 0
    u.resize(n + m + 1, 0);
    q.assign(m + 1, 0);
    const unsigned long long BASE = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
      unsigned long long num =
          (static_cast<unsigned long long>(u[j + n]) << 32) | u[j + n - 1];
      unsigned long long qhat = num / v[n - 1];
      unsigned long long rhat = num % v[n - 1];
      if (qhat >= BASE) {
        qhat = BASE - 1;
        rhat = num - qhat * v[n - 1];
      }
      while (rhat < BASE &&
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
      }
      // multiply-subtract
      long long borrow = 0;
      unsigned long long carry = 0;
      for (size_t i = 0; i < n; ++i) {
        unsigned long long p = qhat * v[i] + carry;
        carry = p >> 32;
        long long t = static_cast<long long>(u[i + j]) - borrow -
                      static_cast<long long>(p & 0xffffffffULL);
        if (t < 0) {
          t += 1LL << 32;
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      long long t = static_cast<long long>(u[j + n]) - borrow -
                    static_cast<long long>(carry);
      if (t < 0) {
        // qhat was one too large: add back
        t += 1LL << 32;
        --qhat;
        unsigned long long c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          unsigned long long cur = static_cast<unsigned long long>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<long long>(c2);
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    u.resize(n);
    r = shr_bits(u, shift);
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }

  static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] |= static_cast<uint32_t>(static_cast<unsigned long long>(a[i]) >> (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size())
        r[i] |= static_cast<uint32_t>(static_cast<unsigned long long>(a[i + 1]) << (32 - s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

// Exact rational with eagerly normalized gcd and positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(den_, num_);
  }
  Rational abs() const { return Rational(num_.abs(), den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) < (b.num_ * a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw Error("Rational: zero denominator");
    if (den_.is_neg()) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

}  // namespace ncspace
