#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ncspace/matrix.hpp"

namespace ncspace {

// Projective point over a characteristic-zero field. Coordinates may arrive
// with denominators; height computations clear them first (lossless by
// scaling invariance).
struct ProjectivePoint {
  FieldPtr field;
  std::vector<Scalar> coords;
};

struct HeightVector {
  std::vector<double> central;  // one absolute height per underlying point
  double representation = 0.0;
  double noncommutative = 0.0;
};

namespace detail {

inline void check_point(const ProjectivePoint& p) {
  if (!p.field || !p.field->is_char0())
    throw Unsupported("heights: characteristic-zero field required");
  if (p.coords.empty()) throw DegenerateInput("projective point has no coordinates");
  bool all_zero = true;
  for (const auto& c : p.coords)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw DegenerateInput("projective point with all coordinates zero");
}

// scale to integral coordinates: multiply by the lcm of all denominators
inline std::vector<Scalar> integral_coords(const ProjectivePoint& p) {
  BigInt lcm(1);
  for (const auto& c : p.coords)
    for (const auto& q : c.coeffs()) {
      BigInt g = BigInt::gcd(lcm, q.den());
      lcm = lcm / g * q.den();
    }
  std::vector<Scalar> out;
  Scalar mult = p.field->from_int(lcm);
  for (const auto& c : p.coords) out.push_back(mult * c);
  return out;
}

// norm of the ideal generated by integral coordinates: index of the lattice
// spanned by { p_i * theta^k } inside Z[theta]
inline BigInt coordinate_ideal_norm(const FieldPtr& F, const std::vector<Scalar>& coords) {
  const int d = F->degree();
  std::vector<std::vector<BigInt>> lattice(static_cast<size_t>(d));
  Scalar theta = d > 1 ? F->generator() : F->one();
  for (const auto& c : coords) {
    Scalar cur = c;
    for (int k = 0; k < d; ++k) {
      for (int row = 0; row < d; ++row) {
        const Rational& q = cur.coeffs()[static_cast<size_t>(row)];
        if (!q.is_integer())
          throw Error("coordinate_ideal_norm: non-integral coordinate");
        lattice[static_cast<size_t>(row)].push_back(q.num());
      }
      if (d > 1) cur = cur * theta;
    }
  }
  return smith_index(lattice);
}

inline std::map<long long, int> factor_positive(BigInt n) {
  std::map<long long, int> out;
  if (n.is_neg()) n = -n;
  if (n.is_zero() || n.is_one()) return out;
  for (long long p = 2; p <= 1000000; p = (p == 2 ? 3 : p + 2)) {
    BigInt bp(p), q, r;
    for (;;) {
      BigInt::divmod(n, bp, q, r);
      if (!r.is_zero()) break;
      ++out[p];
      n = q;
    }
    if (n.is_one()) return out;
    if (BigInt(p) * BigInt(p) > n) break;
  }
  if (!n.is_one()) {
    if (!n.fits_int64()) throw Unsupported("factorization out of desk range");
    ++out[n.to_int64()];
  }
  return out;
}

inline Rational det_rational(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational inv = a[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] * inv;
      if (f.is_zero()) continue;
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace detail

// Weil height relative to the field of definition:
//   H_k(p) = (prod over embeddings of max_i |sigma(p_i)|) / N(coordinate ideal).
// Over Q this is max |p_i| / gcd after clearing denominators.
inline double weil_height(const ProjectivePoint& p, double tol = 1e-12) {
  detail::check_point(p);
  auto coords = detail::integral_coords(p);
  BigInt norm = detail::coordinate_ideal_norm(p.field, coords);
  double arch = 1.0;
  for (const auto& emb : complex_embeddings(p.field, tol)) {
    double mx = 0.0;
    for (const auto& c : coords) mx = std::max(mx, std::abs(emb(c)));
    arch *= mx;
  }
  return arch / norm.to_double();
}

// absolute height H(p) = H_k(p)^{1/[k:Q]} and its logarithm
inline std::pair<double, double> absolute_and_log(const ProjectivePoint& p, double tol = 1e-12) {
  double rel = weil_height(p, tol);
  double abs_h = std::pow(rel, 1.0 / p.field->degree());
  return {abs_h, std::log(abs_h)};
}

// componentwise absolute Weil heights of the underlying central points
inline std::vector<double> central_height(const std::vector<ProjectivePoint>& points) {
  if (points.empty()) throw DegenerateInput("central_height: no underlying points");
  std::vector<double> out;
  for (const auto& p : points) out.push_back(absolute_and_log(p).first);
  return out;
}

// Logarithmic representation height (split case D = K):
//   h = -sum_v n_v min_i det(v applied entrywise to M_i)
// over the finite places of K (archimedean places joined only when the flag
// is set). Conventions: v(0) := 0 entrywise, the min ranges over all
// generator matrices, v is normalized with v(p) = 1 over the rational prime.
inline double representation_height(const FieldPtr& K, const std::vector<Mat>& mats,
                                    bool include_archimedean = false) {
  if (!K->is_char0()) throw Unsupported("representation_height: char-0 fields only");
  if (K->degree() > 2) throw Unsupported("representation_height: field degree > 2");
  if (mats.empty()) throw DegenerateInput("representation_height: no matrices");
  for (const auto& m : mats)
    if (!m.is_square()) throw ShapeError("representation_height: non-square matrix");

  // collect candidate rational primes from norms of all entries
  std::map<long long, int> primes;
  auto norm_of = [&](const Scalar& s) -> Rational {
    if (K->degree() == 1) return s.coeffs()[0];
    // N(x + y theta) for theta^2 + b theta + c = minimal polynomial
    Rational x = s.coeffs()[0], y = s.coeffs()[1];
    Rational b(K->minpoly().c[1]), c(K->minpoly().c[0]);
    return x * x - b * x * y + c * y * y;
  };
  for (const auto& m : mats)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        const Scalar& s = m.at(i, j);
        if (s.is_zero()) continue;
        Rational n = norm_of(s);
        for (const auto& [p, e] : detail::factor_positive(n.num())) primes[p] += e;
        for (const auto& [p, e] : detail::factor_positive(n.den())) primes[p] += e;
      }

  double h = 0.0;
  const size_t dim = static_cast<size_t>(mats[0].rows());
  auto min_det_for = [&](const std::function<Rational(const Scalar&)>& val) {
    bool first = true;
    Rational best;
    for (const auto& m : mats) {
      std::vector<std::vector<Rational>> v(dim, std::vector<Rational>(dim));
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
          const Scalar& s = m.at(static_cast<int>(i), static_cast<int>(j));
          v[i][j] = s.is_zero() ? Rational(0) : val(s);
        }
      Rational d = detail::det_rational(v);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
    return best;
  };

  for (const auto& [p, unused] : primes) {
    (void)unused;
    if (K->degree() == 1) {
      auto vp = [&](const Scalar& s) {
        const Rational& q = s.coeffs()[0];
        int e = 0;
        BigInt bp(p);
        BigInt num = q.num().abs(), den = q.den();
        BigInt qq, rr;
        while (!num.is_zero()) {
          BigInt::divmod(num, bp, qq, rr);
          if (!rr.is_zero()) break;
          ++e;
          num = qq;
        }
        while (!den.is_one()) {
          BigInt::divmod(den, bp, qq, rr);
          if (!rr.is_zero()) break;
          --e;
          den = qq;
        }
        return Rational(e);
      };
      h -= 1.0 * min_det_for(vp).to_double();
      continue;
    }
    // quadratic field: split / inert / ramified from the minpoly mod p
    long long r1 = -1, r2 = -1;
    int root_count = 0;
    for (long long r = 0; r < p; ++r) {
      BigInt val = K->minpoly().eval(Rational(r)).num() % BigInt(p);
      if (val.is_zero()) {
        if (root_count == 0)
          r1 = r;
        else
          r2 = r;
        ++root_count;
      }
    }
    auto vp_rational = [&](const Rational& q) {
      int e = 0;
      BigInt bp(p), num = q.num().abs(), den = q.den(), qq, rr;
      while (!num.is_zero()) {
        BigInt::divmod(num, bp, qq, rr);
        if (!rr.is_zero()) break;
        ++e;
        num = qq;
      }
      while (!den.is_one()) {
        BigInt::divmod(den, bp, qq, rr);
        if (!rr.is_zero()) break;
        --e;
        den = qq;
      }
      return e;
    };
    auto vp_norm_half = [&](const Scalar& s) {
      Rational n = norm_of(s);
      return Rational(vp_rational(n), 2);
    };
    if (root_count == 2) {
      // split: two places of local degree 1; Hensel-lift each root
      for (long long root : {r1, r2}) {
        auto vw = [&](const Scalar& s) {
          // clear denominators: s = (xi + yi theta) / den_l
          Rational x = s.coeffs()[0], y = s.coeffs()[1];
          BigInt den_l = x.den() * y.den();
          BigInt xi = x.num() * (den_l / x.den());
          BigInt yi = y.num() * (den_l / y.den());
          BigInt b = K->minpoly().c[1], c0 = K->minpoly().c[0];
          // w(integral part) <= v_p(N(integral part))
          BigInt nai = xi * xi - b * xi * yi + c0 * yi * yi;
          int cap = vp_rational(Rational(nai));
          BigInt pk(1);
          for (int i = 0; i < cap + 2; ++i) pk *= BigInt(p);
          // Newton-lift the simple root to precision p^(cap+2)
          BigInt r(root);
          for (int it = 0; it < cap + 3; ++it) {
            BigInt f = ((r * r + b * r + c0) % pk + pk) % pk;
            BigInt fp = ((r + r + b) % BigInt(p) + BigInt(p)) % BigInt(p);
            long long fpv = fp.to_int64();
            if (fpv == 0) throw Unsupported("representation_height: non-simple root lift");
            BigInt inv(Field::mod_inverse(fpv, p));
            r = ((r - f * inv) % pk + pk) % pk;
          }
          BigInt img = ((xi + yi * r) % pk + pk) % pk;
          int e = 0;
          BigInt bp(p), qq, rr, cur = img;
          while (!cur.is_zero() && e <= cap) {
            BigInt::divmod(cur, bp, qq, rr);
            if (!rr.is_zero()) break;
            ++e;
            cur = qq;
          }
          return Rational(e - vp_rational(Rational(den_l)));
        };
        h -= 1.0 * min_det_for(vw).to_double();
      }
    } else {
      // inert (no root) or ramified (double root): one place, local degree 2,
      // w(alpha) = v_p(N alpha)/2 in the v(p) = 1 normalization
      h -= 2.0 * min_det_for(vp_norm_half).to_double();
    }
  }

  if (include_archimedean) {
    for (const auto& emb : complex_embeddings(K)) {
      bool first = true;
      double best = 0.0;
      for (const auto& m : mats) {
        // -log|sigma(entry)| entrywise, det over the reals
        const int n = m.rows();
        std::vector<std::vector<double>> v(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const Scalar& s = m.at(i, j);
            v[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s.is_zero() ? 0.0 : -std::log(std::abs(emb(s)));
          }
        // LU determinant
        double det = 1.0;
        for (int c = 0; c < n; ++c) {
          int piv = -1;
          for (int r = c; r < n; ++r)
            if (std::abs(v[static_cast<size_t>(r)][static_cast<size_t>(c)]) > 1e-300) {
              piv = r;
              break;
            }
          if (piv < 0) {
            det = 0.0;
            break;
          }
          if (piv != c) {
            std::swap(v[static_cast<size_t>(piv)], v[static_cast<size_t>(c)]);
            det = -det;
          }
          det *= v[static_cast<size_t>(c)][static_cast<size_t>(c)];
          for (int r = c + 1; r < n; ++r) {
            double f = v[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                       v[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int j = c; j < n; ++j)
              v[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                  f * v[static_cast<size_t>(c)][static_cast<size_t>(j)];
          }
        }
        if (first || det < best) {
          best = det;
          first = false;
        }
      }
      h -= best;  // n_v = 1 per embedding
    }
  }
  return h;
}

// assemble the total height vector (H^Z, H^rep, H^nc)
inline HeightVector total_height(const std::vector<double>& central, double rep, double nc) {
  if (central.empty()) throw DegenerateInput("total_height: empty central vector");
  HeightVector out;
  out.central = central;
  out.representation = rep;
  out.noncommutative = nc;
  for (double c : out.central)
    if (!std::isfinite(c) || c < 1.0)
      throw DegenerateInput("total_height: central entries must be finite and >= 1");
  if (!std::isfinite(rep) || !std::isfinite(nc))
    throw DegenerateInput("total_height: non-finite component");
  return out;
}

}  // namespace ncspace
