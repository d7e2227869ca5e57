#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ncspace/bigint.hpp"
#include "ncspace/errors.hpp"

namespace ncspace {

// Univariate polynomial with arbitrary-precision integer coefficients,
// constant term first. The zero polynomial is the empty vector.
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly from_ints(std::vector<long long> v) {
    IntPoly p;
    p.c.assign(v.begin(), v.end());
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const BigInt& leading() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back().is_one(); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly derivative() const {
    IntPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * BigInt(static_cast<long long>(i)));
    d.trim();
    return d;
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
    return acc;
  }
  std::complex<double> eval(const std::complex<double>& z) const {
    std::complex<double> acc(0, 0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + std::complex<double>(c[i].to_double(), 0);
    return acc;
  }

  double l1_norm() const {
    double s = 0;
    for (const auto& a : c) s += std::abs(a.to_double());
    return s;
  }

  BigInt content() const {
    BigInt g;
    for (const auto& a : c) g = BigInt::gcd(g, a);
    return g.is_zero() ? BigInt(1) : g;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      BigInt a = c[i];
      if (!out.empty()) {
        out += a.is_neg() ? " - " : " + ";
        if (a.is_neg()) a = -a;
      } else if (a.is_neg()) {
        out += "-";
        a = -a;
      }
      if (i == 0) {
        out += a.to_string();
      } else {
        if (!a.is_one()) out += a.to_string() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }
};

namespace detail {

using RatPoly = std::vector<Rational>;  // constant first

inline void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline RatPoly rp_from(const IntPoly& p) {
  RatPoly r;
  for (const auto& a : p.c) r.emplace_back(a);
  return r;
}
inline RatPoly rp_derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long long>(i)));
  rp_trim(d);
  return d;
}
inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  rp_trim(r);
  return r;
}
// division with remainder over Q
inline void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.empty()) throw Error("poly division by zero");
  r = a;
  rp_trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational());
  while (r.size() >= b.size() && !r.empty()) {
    Rational f = r.back() / b.back();
    size_t off = r.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
    rp_trim(r);
  }
  rp_trim(q);
}
inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!b.empty()) {
    RatPoly q, r;
    rp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& x : a) x /= lead;  // monic normal form
  }
  return a;
}
// clear denominators and divide by content -> primitive integer polynomial
inline IntPoly rp_to_primitive(const RatPoly& p) {
  BigInt lcm(1);
  for (const auto& x : p) {
    BigInt g = BigInt::gcd(lcm, x.den());
    lcm = lcm / g * x.den();
  }
  IntPoly out;
  for (const auto& x : p) out.c.push_back(x.num() * (lcm / x.den()));
  out.trim();
  if (!out.is_zero()) {
    BigInt cont = out.content();
    if (out.leading().is_neg()) cont = -cont;
    for (auto& a : out.c) a = a / cont;
  }
  return out;
}

}  // namespace detail

inline IntPoly intpoly_gcd(const IntPoly& a, const IntPoly& b) {
  return detail::rp_to_primitive(detail::rp_gcd(detail::rp_from(a), detail::rp_from(b)));
}

// Yun square-free decomposition: returns factors f1, f2, ... with
// p ~ prod fi^i up to a rational constant; fi square-free and pairwise coprime.
inline std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  using namespace detail;
  std::vector<IntPoly> out;
  if (p.degree() <= 0) return out;
  RatPoly f = rp_from(p);
  RatPoly fp = rp_derivative(f);
  RatPoly g = rp_gcd(f, fp);
  RatPoly c, tmp;
  rp_divmod(f, g, c, tmp);
  RatPoly w, d;
  rp_divmod(fp, g, w, tmp);
  d = rp_sub(w, rp_derivative(c));
  while (true) {
    if (c.size() == 1) break;  // constant
    RatPoly fi = rp_gcd(c, d);
    if (fi.empty()) throw Error("squarefree: unexpected zero gcd");
    RatPoly c2, r2;
    rp_divmod(c, fi, c2, r2);
    RatPoly w2, r3;
    rp_divmod(d, fi, w2, r3);
    out.push_back(rp_to_primitive(fi));
    c = std::move(c2);
    d = rp_sub(w2, rp_derivative(c));
  }
  return out;
}

// Aberth-Ehrlich simultaneous root iteration for a square-free polynomial.
namespace detail {
inline std::vector<std::complex<double>> aberth_squarefree(const IntPoly& p, double tol) {
  int n = p.degree();
  std::vector<std::complex<double>> z(n);
  double lead = std::abs(p.leading().to_double());
  double maxc = 0;
  for (const auto& a : p.c) maxc = std::max(maxc, std::abs(a.to_double()));
  double radius = 1.0 + maxc / lead;
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * 3.14159265358979323846 * k / n + 0.4;
    z[k] = std::polar(radius * (1.0 + 0.05 * k / std::max(1, n)), ang);
  }
  IntPoly dp = p.derivative();
  double bound = tol * (1.0 + p.l1_norm());
  for (int iter = 0; iter < 200; ++iter) {
    bool all_small = true;
    for (int k = 0; k < n; ++k) {
      std::complex<double> pv = p.eval(z[k]);
      if (std::abs(pv) > bound * 1e-3) all_small = false;
      std::complex<double> dv = dp.eval(z[k]);
      if (std::abs(dv) < 1e-300) {
        z[k] += std::complex<double>(1e-6, 1e-6);
        continue;
      }
      std::complex<double> w = pv / dv;
      std::complex<double> rep(0, 0);
      for (int j = 0; j < n; ++j)
        if (j != k) rep += 1.0 / (z[k] - z[j]);
      std::complex<double> denom = 1.0 - w * rep;
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      z[k] -= w / denom;
    }
    if (all_small) break;
  }
  // Newton polish
  for (int k = 0; k < n; ++k) {
    for (int it = 0; it < 40; ++it) {
      std::complex<double> pv = p.eval(z[k]);
      std::complex<double> dv = dp.eval(z[k]);
      if (std::abs(dv) < 1e-300) break;
      std::complex<double> step = pv / dv;
      z[k] -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(z[k]))) break;
    }
    // snap tiny imaginary parts of genuinely real roots
    if (std::abs(z[k].imag()) < 1e-12 * (1.0 + std::abs(z[k].real())) &&
        std::abs(p.eval(std::complex<double>(z[k].real(), 0)).real()) <= bound)
      z[k] = std::complex<double>(z[k].real(), 0);
  }
  return z;
}
}  // namespace detail

// All complex roots of p with multiplicity, each certified to satisfy
// |p(z)| < tol * (1 + l1(p)). Multiple roots are resolved exactly via
// square-free decomposition, so clustered output stays accurate.
inline std::vector<std::complex<double>> poly_roots_complex(const IntPoly& p, double tol) {
  if (p.is_zero()) throw DegenerateInput("poly_roots_complex: zero polynomial");
  if (tol <= 0) throw DegenerateInput("poly_roots_complex: tol must be positive");
  std::vector<std::complex<double>> roots;
  auto factors = squarefree_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    auto part = detail::aberth_squarefree(factors[i], tol);
    for (const auto& z : part)
      for (size_t m = 0; m <= i; ++m) roots.push_back(z);
  }
  double bound = tol * (1.0 + p.l1_norm());
  for (const auto& z : roots)
    if (std::abs(p.eval(z)) >= bound)
      throw Error("poly_roots_complex: residual certification failed");
  // deterministic order: by real part desc, then imag asc
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace ncspace
