#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ncspace/field.hpp"

namespace ncspace {

// Dense matrix of exact field elements, row major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(FieldPtr f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, field_->zero()) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  }

  static Mat identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  friend Mat operator+(const Mat& x, const Mat& y) {
    x.check_shape(y);
    Mat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    x.check_shape(y);
    Mat r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw ShapeError("matrix product shape mismatch");
    Mat r(x.field_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const Scalar& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const Scalar& w = y.at(k, j);
          if (w.is_zero()) continue;
          r.at(i, j) += v * w;
        }
      }
    return r;
  }
  friend Mat operator*(const Scalar& s, const Mat& x) {
    Mat r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  Mat transpose() const {
    Mat r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<Scalar> a_;

  void check_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError("matrix shape mismatch");
    if (field_ && o.field_ && !field_->same_as(*o.field_))
      throw FieldMismatch("matrices over different fields");
  }
};

using Vec = std::vector<Scalar>;

struct RrefResult {
  int rank = 0;
  Mat reduced;                 // reduced row echelon form
  std::vector<int> pivots;     // pivot column per pivot row
  std::vector<Vec> kernel;     // exact basis of the right null space
};

// Exact Gauss-Jordan elimination; deterministic pivot choice (first nonzero
// row in each column).
inline RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& a = res.reduced;
  const FieldPtr& F = m.field();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  // kernel basis: one vector per free column
  std::vector<int> pivot_of_col(static_cast<size_t>(a.cols()), -1);
  for (int i = 0; i < static_cast<int>(res.pivots.size()); ++i)
    pivot_of_col[static_cast<size_t>(res.pivots[i])] = i;
  for (int c = 0; c < a.cols(); ++c) {
    if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
    Vec v(static_cast<size_t>(a.cols()), F->zero());
    v[static_cast<size_t>(c)] = F->one();
    for (int i = 0; i < static_cast<int>(res.pivots.size()); ++i)
      v[static_cast<size_t>(res.pivots[i])] = -a.at(i, c);
    res.kernel.push_back(std::move(v));
  }
  return res;
}

inline int rank_of(const Mat& m) { return rref(m).rank; }

// Characteristic polynomial det(lambda*I - m) of a square matrix with
// integral entries over a characteristic-zero field: exact Hessenberg
// reduction over Q followed by the leading-minor recurrence.
inline IntPoly char_poly(const Mat& m) {
  if (!m.is_square()) throw ShapeError("char_poly: matrix must be square");
  if (!m.field()->is_char0())
    throw Unsupported("char_poly: integer matrices over char-0 fields only");
  const int n = m.rows();
  // extract rational entries (must be prime-field valued)
  std::vector<std::vector<Rational>> h(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        m.at(i, j).rational_value();
  if (n == 0) return IntPoly::from_ints({1});
  // similarity reduction to upper Hessenberg form
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (!h[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      std::swap(h[static_cast<size_t>(piv)], h[static_cast<size_t>(c + 1)]);
      for (int i = 0; i < n; ++i)
        std::swap(h[static_cast<size_t>(i)][static_cast<size_t>(piv)],
                  h[static_cast<size_t>(i)][static_cast<size_t>(c + 1)]);
    }
    Rational d = h[static_cast<size_t>(c + 1)][static_cast<size_t>(c)];
    for (int i = c + 2; i < n; ++i) {
      Rational f = h[static_cast<size_t>(i)][static_cast<size_t>(c)] / d;
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        h[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * h[static_cast<size_t>(c + 1)][static_cast<size_t>(j)];
      for (int i2 = 0; i2 < n; ++i2)
        h[static_cast<size_t>(i2)][static_cast<size_t>(c + 1)] +=
            f * h[static_cast<size_t>(i2)][static_cast<size_t>(i)];
    }
  }
  // p_k = charpoly of leading k x k block of the Hessenberg matrix
  using RPoly = std::vector<Rational>;  // constant first
  auto poly_scale = [](const RPoly& p, const Rational& s) {
    RPoly r = p;
    for (auto& x : r) x *= s;
    return r;
  };
  auto poly_addto = [](RPoly& p, const RPoly& q) {
    if (q.size() > p.size()) p.resize(q.size());
    for (size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  };
  std::vector<RPoly> p(static_cast<size_t>(n) + 1);
  p[0] = {Rational(1)};
  for (int k = 1; k <= n; ++k) {
    // (lambda - h[k-1][k-1]) * p_{k-1}
    RPoly t(p[static_cast<size_t>(k - 1)].size() + 1);
    for (size_t i = 0; i < p[static_cast<size_t>(k - 1)].size(); ++i) {
      t[i + 1] += p[static_cast<size_t>(k - 1)][i];
      t[i] -= h[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)] *
              p[static_cast<size_t>(k - 1)][i];
    }
    Rational sub(1);
    for (int m2 = 1; m2 < k; ++m2) {
      sub *= h[static_cast<size_t>(k - m2)][static_cast<size_t>(k - m2 - 1)];
      if (sub.is_zero()) break;
      Rational coeff = -(sub * h[static_cast<size_t>(k - m2 - 1)][static_cast<size_t>(k - 1)]);
      if (coeff.is_zero()) continue;
      poly_addto(t, poly_scale(p[static_cast<size_t>(k - m2 - 1)], coeff));
    }
    p[static_cast<size_t>(k)] = std::move(t);
  }
  // entries integral => characteristic polynomial is integer and monic
  IntPoly out;
  for (const auto& coeff : p[static_cast<size_t>(n)]) {
    if (!coeff.is_integer())
      throw Error("char_poly: non-integral result for integral input");
    out.c.push_back(coeff.num());
  }
  out.trim();
  return out;
}

// Lattice index [Z^r : colspan(m)] for an integer matrix (rows = r) whose
// columns span a full-rank sublattice: product of Hermite pivot values.
inline BigInt smith_index(const std::vector<std::vector<BigInt>>& m) {
  if (m.empty()) return BigInt(1);
  size_t r = m.size(), c = m[0].size();
  for (const auto& row : m)
    if (row.size() != c) throw ShapeError("smith_index: ragged matrix");
  std::vector<std::vector<BigInt>> a = m;
  size_t col = 0;
  BigInt index(1);
  for (size_t row = 0; row < r; ++row) {
    // gcd-eliminate row `row` across columns col..c-1
    size_t piv = col;
    for (;;) {
      piv = c;  // find a column with nonzero entry in this row
      for (size_t j = col; j < c; ++j)
        if (!a[row][j].is_zero()) {
          piv = j;
          break;
        }
      if (piv == c) throw RankError("smith_index: deficient rank");
      if (piv != col)
        for (size_t i = 0; i < r; ++i) std::swap(a[i][piv], a[i][col]);
      // reduce all other columns by the pivot column using Euclid steps
      bool clean = true;
      for (size_t j = col + 1; j < c; ++j) {
        if (a[row][j].is_zero()) continue;
        BigInt q = a[row][j] / a[row][col];
        if (!q.is_zero())
          for (size_t i = 0; i < r; ++i) a[i][j] -= q * a[i][col];
        if (!a[row][j].is_zero()) {
          for (size_t i = 0; i < r; ++i) std::swap(a[i][j], a[i][col]);
          clean = false;
        }
      }
      if (clean) break;
    }
    index *= a[row][col].abs();
    ++col;
  }
  return index;
}

// One archimedean embedding of a characteristic-zero field.
struct Embedding {
  std::complex<double> theta;  // image of the extension generator (0 for Q)
  std::complex<double> operator()(const Scalar& s) const { return s.embed(theta); }
};

// All complex embeddings: one for Q, deg(minpoly) for Q(theta). Root order is
// the deterministic order of poly_roots_complex.
inline std::vector<Embedding> complex_embeddings(const FieldPtr& f, double tol = 1e-12) {
  if (!f->is_char0()) throw NoEmbeddings("positive characteristic field");
  if (f->degree() == 1) return {Embedding{std::complex<double>(0, 0)}};
  std::vector<Embedding> out;
  for (const auto& z : poly_roots_complex(f->minpoly(), tol)) out.push_back(Embedding{z});
  return out;
}

}  // namespace ncspace
