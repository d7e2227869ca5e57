#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncspace/repmod.hpp"

namespace ncspace {

// One derivation delta restricted to generators: a matrix D_g : M -> N per
// generator. delta extends to words by the Leibniz rule
//   delta(u v) = delta(u) rho_M(v) + rho_N(u) delta(v),  delta(scalar) = 0.
using DerivationTuple = std::map<int, Mat>;

struct ExtReport {
  int dim_hom = 0;    // Ext^0
  int dim_der = 0;    // derivations A -> Hom_k(M,N)
  int dim_inner = 0;  // inner derivations theta_g = rho_N(g) theta - theta rho_M(g)
  int dim_ext1 = 0;   // dim_der - dim_inner
  std::vector<DerivationTuple> cocycles;  // representatives mod inner
};

namespace detail {

// prefix products over N and suffix products over M for one word
struct WordSplit {
  std::vector<Mat> prefix;  // prefix[i] = rho_N(w[0..i))
  std::vector<Mat> suffix;  // suffix[i] = rho_M(w(i..end])
};

inline WordSplit split_word(const Word& w, const Representation& M,
                            const Representation& N) {
  const FieldPtr& F = M.algebra->field;
  WordSplit s;
  s.prefix.resize(w.size() + 1, Mat::identity(F, N.dim));
  s.suffix.resize(w.size() + 1, Mat::identity(F, M.dim));
  for (size_t i = 0; i < w.size(); ++i)
    s.prefix[i + 1] = s.prefix[i] * N.mat(w[i]);
  for (size_t i = w.size(); i-- > 0;)
    s.suffix[i] = M.mat(w[i]) * s.suffix[i + 1];
  return s;
}

}  // namespace detail

// The linear system "delta(r) = 0 for every relation r" in the unknowns
// D_g[r][c]; one block of dim(N)*dim(M) scalar rows per relation. Unknown
// (g, r, c) lives at column g*nN*nM + r*nM + c.
inline Mat derivation_system(const Representation& M, const Representation& N) {
  check_same_algebra(M, N);
  const FieldPtr& F = M.algebra->field;
  const int nm = N.dim * M.dim;
  const int G = static_cast<int>(M.algebra->gens.size());
  const auto& rels = M.algebra->relations;
  Mat sys(F, static_cast<int>(rels.size()) * nm, G * nm);
  for (size_t k = 0; k < rels.size(); ++k) {
    for (const auto& [coeff, w] : rels[k].terms()) {
      if (w.empty()) continue;  // delta of a scalar term vanishes
      auto spl = detail::split_word(w, M, N);
      for (size_t i = 0; i < w.size(); ++i) {
        const Mat& L = spl.prefix[i];        // N.dim x N.dim
        const Mat& R = spl.suffix[i + 1];    // M.dim x M.dim
        const int g = w[i];
        // contribution coeff * L * D_g * R to the relation block
        for (int a = 0; a < N.dim; ++a)
          for (int r = 0; r < N.dim; ++r) {
            Scalar lar = coeff * L.at(a, r);
            if (lar.is_zero()) continue;
            for (int c = 0; c < M.dim; ++c)
              for (int b = 0; b < M.dim; ++b) {
                Scalar v = lar * R.at(c, b);
                if (v.is_zero()) continue;
                int row = static_cast<int>(k) * nm + a * M.dim + b;
                int col = g * nm + r * M.dim + c;
                sys.at(row, col) += v;
              }
          }
      }
    }
  }
  return sys;
}

// theta |-> (rho_N(g) theta - theta rho_M(g))_g as a (G*nm) x nm matrix;
// its rank is dim_inner and its kernel is Hom_A(M, N).
inline Mat inner_map(const Representation& M, const Representation& N) {
  check_same_algebra(M, N);
  const FieldPtr& F = M.algebra->field;
  const int nm = N.dim * M.dim;
  const int G = static_cast<int>(M.algebra->gens.size());
  Mat map(F, G * nm, nm);
  for (int g = 0; g < G; ++g) {
    const Mat& rn = N.mat(g);
    const Mat& rm = M.mat(g);
    for (int a = 0; a < N.dim; ++a)
      for (int b = 0; b < M.dim; ++b) {
        int row = g * nm + a * M.dim + b;
        for (int r = 0; r < N.dim; ++r) map.at(row, r * M.dim + b) += rn.at(a, r);
        for (int c = 0; c < M.dim; ++c) map.at(row, a * M.dim + c) -= rm.at(c, b);
      }
  }
  return map;
}

inline DerivationTuple tuple_from_vector(const Vec& v, const Representation& M,
                                         const Representation& N) {
  const FieldPtr& F = M.algebra->field;
  const int nm = N.dim * M.dim;
  DerivationTuple t;
  for (int g = 0; g < static_cast<int>(M.algebra->gens.size()); ++g) {
    Mat d(F, N.dim, M.dim);
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        d.at(r, c) = v[static_cast<size_t>(g * nm + r * M.dim + c)];
    t.emplace(g, std::move(d));
  }
  return t;
}

namespace detail {

// incremental echelon accumulator for choosing coset representatives
class EchelonSpan {
 public:
  explicit EchelonSpan(FieldPtr f) : field_(std::move(f)) {}

  // reduce v against the span; false when v already lies in it, true when a
  // new (normalized) row was added. Stored rows are reduced against all
  // earlier rows, so a single in-order pass fully reduces v.
  bool add(Vec v) {
    for (const auto& [p, u] : rows_) {
      if (v[p].is_zero()) continue;
      Scalar f = v[p];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * u[j];
    }
    size_t piv = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv == v.size()) return false;
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x = inv * x;
    rows_.emplace_back(piv, std::move(v));
    last_ = rows_.back().second;
    return true;
  }
  const Vec& last_added() const { return last_; }

 private:
  FieldPtr field_;
  std::vector<std::pair<size_t, Vec>> rows_;
  Vec last_;
};

}  // namespace detail

// Ext^1_A(M, N) = Der_k(A, Hom_k(M, N)) / Ad via exact linear algebra.
// Cocycle representatives are the reduced-echelon completion of the inner
// subspace inside the derivation kernel (deterministic given generator order).
inline ExtReport ext1(const Representation& M, const Representation& N) {
  ExtReport rep;
  Mat ds = derivation_system(M, N);
  auto dres = rref(ds);
  rep.dim_der = static_cast<int>(dres.kernel.size());

  Mat im = inner_map(M, N);
  auto ires = rref(im);
  rep.dim_inner = ires.rank;
  rep.dim_hom = static_cast<int>(ires.kernel.size());
  rep.dim_ext1 = rep.dim_der - rep.dim_inner;
  if (rep.dim_ext1 < 0)
    throw Error("ext1: inner derivations escaped the derivation kernel");

  // choose representatives: seed the echelon span with the inner image, then
  // sweep the derivation kernel in deterministic order
  detail::EchelonSpan span(M.algebra->field);
  const int nm = N.dim * M.dim;
  for (int c = 0; c < nm; ++c) {
    Vec col(static_cast<size_t>(im.rows()), M.algebra->field->zero());
    for (int r = 0; r < im.rows(); ++r) col[static_cast<size_t>(r)] = im.at(r, c);
    span.add(std::move(col));
  }
  for (const auto& v : dres.kernel)
    if (span.add(v)) rep.cocycles.push_back(tuple_from_vector(span.last_added(), M, N));
  if (static_cast<int>(rep.cocycles.size()) != rep.dim_ext1)
    throw Error("ext1: representative count mismatch");
  return rep;
}

// Evaluate delta(r) for an explicit derivation tuple by the Leibniz rule;
// kept separate from derivation_system so the brute-force oracle does not
// share the linearization path it is meant to check.
inline Mat leibniz_eval(const NcPoly& rel, const Representation& M,
                        const Representation& N, const DerivationTuple& t) {
  const FieldPtr& F = M.algebra->field;
  Mat acc(F, N.dim, M.dim);
  for (const auto& [coeff, w] : rel.terms()) {
    if (w.empty()) continue;
    Mat left = Mat::identity(F, N.dim);
    for (size_t i = 0; i < w.size(); ++i) {
      Mat right = Mat::identity(F, M.dim);
      for (size_t j = i + 1; j < w.size(); ++j) right = right * M.mat(w[j]);
      acc = acc + coeff * (left * t.at(w[i]) * right);
      left = left * N.mat(w[i]);
    }
  }
  return acc;
}

// Independent oracle for tiny finite fields: exhaustively enumerate candidate
// tuples, count the solutions of every relation constraint, subtract the
// exhaustively enumerated inner dimension. Requires at most 12 unknowns.
inline int ext1_bruteforce(const Representation& M, const Representation& N) {
  check_same_algebra(M, N);
  const FieldPtr& F = M.algebra->field;
  if (!F->is_finite()) throw Unsupported("ext1_bruteforce: finite fields only");
  const int nm = N.dim * M.dim;
  const int G = static_cast<int>(M.algebra->gens.size());
  const long long unknowns = static_cast<long long>(G) * nm;
  if (unknowns > 12) throw TooLarge("ext1_bruteforce: more than 12 unknowns");
  BigInt space = F->size().pow(static_cast<unsigned long long>(unknowns));
  if (!space.fits_int64() || space.to_int64() > 10000000)
    throw TooLarge("ext1_bruteforce: search space too large");
  auto elems = F->enumerate();
  const long long q = static_cast<long long>(elems.size());

  auto log_q = [&](long long count) {
    int e = 0;
    long long acc = 1;
    while (acc < count) {
      acc *= q;
      ++e;
    }
    if (acc != count)
      throw Error("ext1_bruteforce: solution count is not a power of q");
    return e;
  };

  // count derivation tuples satisfying every relation
  long long total = space.to_int64();
  long long der_count = 0;
  std::vector<size_t> idx(static_cast<size_t>(unknowns), 0);
  for (long long it = 0; it < total; ++it) {
    DerivationTuple t;
    for (int g = 0; g < G; ++g) {
      Mat d(F, N.dim, M.dim);
      for (int r = 0; r < N.dim; ++r)
        for (int c = 0; c < M.dim; ++c)
          d.at(r, c) = elems[idx[static_cast<size_t>(g * nm + r * M.dim + c)]];
      t.emplace(g, std::move(d));
    }
    bool ok = true;
    for (const auto& rel : M.algebra->relations)
      if (!leibniz_eval(rel, M, N, t).is_zero()) {
        ok = false;
        break;
      }
    if (ok) ++der_count;
    for (size_t j = 0; j < idx.size(); ++j) {
      if (++idx[j] < elems.size()) break;
      idx[j] = 0;
    }
  }

  // enumerate the inner tuples theta |-> (rho_N(g) theta - theta rho_M(g))
  BigInt theta_space = F->size().pow(static_cast<unsigned long long>(nm));
  if (!theta_space.fits_int64() || theta_space.to_int64() > 10000000)
    throw TooLarge("ext1_bruteforce: theta space too large");
  std::set<std::string> images;
  std::vector<size_t> tix(static_cast<size_t>(nm), 0);
  long long ttotal = theta_space.to_int64();
  for (long long it = 0; it < ttotal; ++it) {
    Mat theta(F, N.dim, M.dim);
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        theta.at(r, c) = elems[tix[static_cast<size_t>(r * M.dim + c)]];
    std::string key;
    for (int g = 0; g < G; ++g) {
      Mat d = N.mat(g) * theta - theta * M.mat(g);
      for (int r = 0; r < N.dim; ++r)
        for (int c = 0; c < M.dim; ++c) key += d.at(r, c).to_string() + "|";
    }
    images.insert(key);
    for (size_t j = 0; j < tix.size(); ++j) {
      if (++tix[j] < elems.size()) break;
      tix[j] = 0;
    }
  }
  return log_q(der_count) - log_q(static_cast<long long>(images.size()));
}

}  // namespace ncspace
