#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncspace/parser.hpp"
#include "ncspace/presentation.hpp"

namespace ncspace {

// A finite-dimensional module over a presented algebra: one dim x dim matrix
// per generator, satisfying every relation (enforced by validate()).
struct Representation {
  AlgebraPtr algebra;
  int dim = 0;
  std::map<int, Mat> mats;
  std::string label;

  const Mat& mat(int gen) const {
    auto it = mats.find(gen);
    if (it == mats.end())
      throw UnboundGenerator("no matrix for generator " +
                             algebra->gens[static_cast<size_t>(gen)]);
    return it->second;
  }
};

struct Violation {
  std::string relation;  // offending relation, printed
  Mat value;             // its nonzero evaluation
};

// Check every relation evaluates to zero; empty result means valid.
inline std::vector<Violation> validate(const Representation& rep) {
  if (rep.dim <= 0) throw ShapeError("module dimension must be positive");
  for (const auto& [g, m] : rep.mats)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw ShapeError("matrix for generator " +
                       rep.algebra->gens[static_cast<size_t>(g)] + " is not " +
                       std::to_string(rep.dim) + "x" + std::to_string(rep.dim));
  for (size_t g = 0; g < rep.algebra->gens.size(); ++g)
    if (!rep.mats.count(static_cast<int>(g)))
      throw UnboundGenerator("no matrix for generator " + rep.algebra->gens[g]);
  std::vector<Violation> out;
  for (const auto& r : rep.algebra->relations) {
    Mat v = r.eval(rep.mats, rep.dim);
    if (!v.is_zero()) out.push_back({r.to_string(rep.algebra->gens), v});
  }
  return out;
}

// Build a Representation from a parsed module, insisting on validity.
inline Representation make_representation(const AlgebraPtr& alg, const ParsedModule& pm,
                                          bool enforce_valid = true) {
  Representation rep{alg, pm.dim, pm.mats, pm.name};
  auto viols = validate(rep);
  if (enforce_valid && !viols.empty())
    throw Error("module " + pm.name + " violates relation " + viols[0].relation);
  return rep;
}

inline void check_same_algebra(const Representation& M, const Representation& N) {
  if (M.algebra.get() == N.algebra.get()) return;
  if (!M.algebra || !N.algebra) throw AlgebraMismatch("missing algebra");
  const Algebra &a = *M.algebra, &b = *N.algebra;
  if (!a.field->same_as(*b.field) || a.gens != b.gens ||
      a.relations.size() != b.relations.size())
    throw AlgebraMismatch("representations over different algebras");
  for (size_t i = 0; i < a.relations.size(); ++i)
    if (a.relations[i] != b.relations[i])
      throw AlgebraMismatch("representations over different algebras");
}

// Exact basis of the intertwiner space
//   Hom_A(M, N) = { theta : rho_N(g) theta = theta rho_M(g) for all g }.
// Returned matrices are dim(N) x dim(M); the count is dim Ext^0.
inline std::vector<Mat> hom_space(const Representation& M, const Representation& N) {
  check_same_algebra(M, N);
  const FieldPtr& F = M.algebra->field;
  const int nm = N.dim * M.dim;
  const int G = static_cast<int>(M.algebra->gens.size());
  // unknown theta stacked row-major: theta[r][c] at index r*M.dim + c
  Mat sys(F, G * nm, nm);
  for (int g = 0; g < G; ++g) {
    const Mat& rn = N.mat(g);
    const Mat& rm = M.mat(g);
    for (int a = 0; a < N.dim; ++a)
      for (int b = 0; b < M.dim; ++b) {
        int row = g * nm + a * M.dim + b;
        // (rho_N(g) theta)_{ab} = sum_r rn[a][r] theta[r][b]
        for (int r = 0; r < N.dim; ++r)
          sys.at(row, r * M.dim + b) += rn.at(a, r);
        // -(theta rho_M(g))_{ab} = -sum_c theta[a][c] rm[c][b]
        for (int c = 0; c < M.dim; ++c)
          sys.at(row, a * M.dim + c) -= rm.at(c, b);
      }
  }
  auto res = rref(sys);
  std::vector<Mat> basis;
  for (const auto& v : res.kernel) {
    Mat th(F, N.dim, M.dim);
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < M.dim; ++c) th.at(r, c) = v[static_cast<size_t>(r * M.dim + c)];
    basis.push_back(std::move(th));
  }
  return basis;
}

namespace detail {
inline bool is_invertible(const Mat& m) {
  return m.is_square() && rank_of(m) == m.rows();
}
}  // namespace detail

// True iff some intertwiner is invertible. Over infinite fields searches the
// deterministic coefficient grid {0, +-1, +-2}^dim(Hom); over small finite
// fields enumerates everything; throws Undecided when the finite enumeration
// would exceed 10^6 combinations.
inline bool is_isomorphic(const Representation& M, const Representation& N) {
  check_same_algebra(M, N);
  if (M.dim != N.dim) return false;
  auto basis = hom_space(M, N);
  if (basis.empty()) return false;
  const FieldPtr& F = M.algebra->field;
  const size_t k = basis.size();
  if (F->is_finite()) {
    BigInt total = F->size().pow(static_cast<unsigned long long>(k));
    if (!total.fits_int64() || total.to_int64() > 1000000)
      throw Undecided("intertwiner search space too large");
    auto elems = F->enumerate();
    std::vector<size_t> idx(k, 0);
    for (;;) {
      Mat cand(F, M.dim, M.dim);
      bool nonzero = false;
      for (size_t i = 0; i < k; ++i)
        if (idx[i]) {
          cand = cand + elems[idx[i]] * basis[i];
          nonzero = true;
        }
      if (nonzero && detail::is_invertible(cand)) return true;
      size_t j = 0;
      for (; j < k; ++j) {
        if (++idx[j] < elems.size()) break;
        idx[j] = 0;
      }
      if (j == k) return false;
    }
  }
  // deterministic sequence of small integer combinations
  const std::vector<long long> coeffs{0, 1, -1, 2, -2};
  std::vector<size_t> idx(k, 0);
  for (;;) {
    Mat cand(F, M.dim, M.dim);
    bool nonzero = false;
    for (size_t i = 0; i < k; ++i)
      if (idx[i]) {
        cand = cand + F->from_int(coeffs[idx[i]]) * basis[i];
        nonzero = true;
      }
    if (nonzero && detail::is_invertible(cand)) return true;
    size_t j = 0;
    for (; j < k; ++j) {
      if (++idx[j] < coeffs.size()) break;
      idx[j] = 0;
    }
    if (j == k) return false;
  }
}

// Central character: for each designated central element z, the exact monic
// minimal polynomial of rho(z) on M (coefficients in the base field, constant
// first). Degree-one entries mean rho(z) is the scalar -c0.
struct CentralCharacter {
  std::map<std::string, std::vector<Scalar>> values;

  friend bool operator==(const CentralCharacter& a, const CentralCharacter& b) {
    return a.values == b.values;
  }
  friend bool operator!=(const CentralCharacter& a, const CentralCharacter& b) {
    return !(a == b);
  }
};

inline std::vector<Scalar> minimal_polynomial(const Mat& z) {
  const FieldPtr& F = z.field();
  const int n = z.rows();
  const int nn = n * n;
  std::vector<Mat> powers{Mat::identity(F, n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * z);
  for (int deg = 1; deg <= n; ++deg) {
    // solve c_0 I + c_1 Z + ... + c_{deg-1} Z^{deg-1} + Z^deg = 0
    Mat sys(F, nn, deg);
    Vec rhs(static_cast<size_t>(nn), F->zero());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int row = a * n + b;
        for (int k = 0; k < deg; ++k) sys.at(row, k) = powers[static_cast<size_t>(k)].at(a, b);
        rhs[static_cast<size_t>(row)] = -powers[static_cast<size_t>(deg)].at(a, b);
      }
    // augmented elimination
    Mat aug(F, nn, deg + 1);
    for (int r = 0; r < nn; ++r) {
      for (int c = 0; c < deg; ++c) aug.at(r, c) = sys.at(r, c);
      aug.at(r, deg) = rhs[static_cast<size_t>(r)];
    }
    auto res = rref(aug);
    bool solvable = true;
    for (const auto& pc : res.pivots)
      if (pc == deg) solvable = false;  // pivot in the rhs column
    if (!solvable) continue;
    std::vector<Scalar> mp(static_cast<size_t>(deg) + 1, F->zero());
    mp[static_cast<size_t>(deg)] = F->one();
    // read solution: each pivot row gives c_{pivot} = aug[row][deg]
    for (size_t i = 0; i < res.pivots.size(); ++i)
      mp[static_cast<size_t>(res.pivots[i])] = res.reduced.at(static_cast<int>(i), deg);
    return mp;
  }
  throw Error("minimal_polynomial: no annihilating polynomial found");
}

inline CentralCharacter central_character(const Representation& M,
                                          const std::vector<std::string>& elements) {
  CentralCharacter out;
  for (const auto& name : elements) {
    const NcPoly* z = M.algebra->central_element(name);
    if (!z) throw Error("unknown central element " + name);
    Mat zm = z->eval(M.mats, M.dim);
    for (size_t g = 0; g < M.algebra->gens.size(); ++g) {
      const Mat& gm = M.mat(static_cast<int>(g));
      if (zm * gm != gm * zm)
        throw NotCentral("element " + name + " does not act centrally on " + M.label);
    }
    out.values[name] = minimal_polynomial(zm);
  }
  return out;
}

// Reinterpret a representation over a degree-d extension of its prime field.
// Identity extensions are allowed; otherwise source must be the prime field
// of the target and characteristics must match.
inline Representation extend_scalars(const Representation& M, const FieldPtr& K) {
  const FieldPtr& k = M.algebra->field;
  if (k->same_as(*K)) return M;
  if (k->characteristic() != K->characteristic())
    throw FieldMismatch("extend_scalars: characteristic mismatch");
  if (k->degree() != 1)
    throw Unsupported("extend_scalars: source must be the prime field");
  auto lift_scalar = [&](const Scalar& s) {
    return K->from_rational(s.coeffs()[0]);
  };
  auto lift_poly = [&](const NcPoly& p) {
    NcPoly out(K);
    for (const auto& [c, w] : p.terms()) out = out + NcPoly::word(K, w, lift_scalar(c));
    return out;
  };
  auto alg = std::make_shared<Algebra>();
  alg->field = K;
  alg->name = M.algebra->name;
  alg->gens = M.algebra->gens;
  alg->central_gens = M.algebra->central_gens;
  for (const auto& r : M.algebra->relations) alg->relations.push_back(lift_poly(r));
  for (const auto& [n, p] : M.algebra->central_elements)
    alg->central_elements.emplace_back(n, lift_poly(p));
  Representation out;
  out.algebra = alg;
  out.dim = M.dim;
  out.label = M.label;
  for (const auto& [g, m] : M.mats) {
    Mat lm(K, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) lm.at(i, j) = lift_scalar(m.at(i, j));
    out.mats.emplace(g, std::move(lm));
  }
  return out;
}

}  // namespace ncspace
