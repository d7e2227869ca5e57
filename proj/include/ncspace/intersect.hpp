#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncspace/field.hpp"

namespace ncspace {

// Multivariate commutative polynomials in named central variables, kept in
// canonical sorted-term form under degrevlex.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// degrevlex: higher total degree wins; ties broken by the *last* non-zero
// entry of a - b being negative for a > b
inline bool degrevlex_greater(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

inline bool exp_divides(const Exponent& a, const Exponent& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

class CommPoly {
 public:
  CommPoly() = default;
  CommPoly(FieldPtr f, size_t nvars) : field_(std::move(f)), nvars_(nvars) {}

  static CommPoly variable(const FieldPtr& f, size_t nvars, size_t i) {
    CommPoly p(f, nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.terms_.push_back({e, f->one()});
    return p;
  }
  static CommPoly constant(const FieldPtr& f, size_t nvars, const Scalar& c) {
    CommPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.push_back({Exponent(nvars, 0), c});
    return p;
  }

  const FieldPtr& field() const { return field_; }
  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
  }
  const std::vector<std::pair<Exponent, Scalar>>& terms() const { return terms_; }
  const Exponent& leading_exp() const { return terms_.front().first; }
  const Scalar& leading_coeff() const { return terms_.front().second; }

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
        return false;
    return true;
  }

  friend CommPoly operator+(const CommPoly& a, const CommPoly& b) {
    CommPoly r(a.field_ ? a.field_ : b.field_, std::max(a.nvars_, b.nvars_));
    std::map<Exponent, Scalar> acc;
    for (const auto& t : a.terms_) acc.emplace(t.first, t.second);
    for (const auto& t : b.terms_) {
      auto it = acc.find(t.first);
      if (it == acc.end())
        acc.emplace(t.first, t.second);
      else
        it->second += t.second;
    }
    for (auto& kv : acc)
      if (!kv.second.is_zero()) r.terms_.push_back({kv.first, kv.second});
    r.sort_terms();
    return r;
  }
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b) { return a + (-b); }
  CommPoly operator-() const {
    CommPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(a.field_ ? a.field_ : b.field_, std::max(a.nvars_, b.nvars_));
    std::map<Exponent, Scalar> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Exponent e = exp_add(s.first, t.first);
        Scalar c = s.second * t.second;
        auto it = acc.find(e);
        if (it == acc.end())
          acc.emplace(std::move(e), std::move(c));
        else
          it->second += c;
      }
    for (auto& kv : acc)
      if (!kv.second.is_zero()) r.terms_.push_back({kv.first, kv.second});
    r.sort_terms();
    return r;
  }
  CommPoly monomial_times(const Exponent& e, const Scalar& c) const {
    CommPoly r(field_, nvars_);
    for (const auto& t : terms_) r.terms_.push_back({exp_add(t.first, e), c * t.second});
    return r;  // order is preserved under monomial shifts
  }
  CommPoly monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading_coeff().inverse();
    CommPoly r = *this;
    for (auto& t : r.terms_) t.second = inv * t.second;
    return r;
  }

  std::string to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string cs = c.to_string();
      bool simple = cs.find(' ') == std::string::npos;
      bool neg = simple && !cs.empty() && cs[0] == '-';
      if (!out.empty()) {
        out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
      }
      if (!simple) cs = "(" + cs + ")";
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else if (cs == "-1") {
        out += "-" + mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  FieldPtr field_;
  size_t nvars_ = 0;
  std::vector<std::pair<Exponent, Scalar>> terms_;  // degrevlex descending

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first); });
  }
};

struct CommIdeal {
  FieldPtr field;
  std::vector<std::string> vars;
  std::vector<CommPoly> gens;
};

// full normal form of p against the basis (reduces every term)
inline CommPoly normal_form(CommPoly p, const std::vector<CommPoly>& basis) {
  if (p.is_zero()) return p;
  const FieldPtr& F = p.field();
  CommPoly remainder(F, p.nvars());
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (exp_divides(g.leading_exp(), p.leading_exp())) {
        Scalar c = p.leading_coeff() / g.leading_coeff();
        p = p - g.monomial_times(exp_sub(p.leading_exp(), g.leading_exp()), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the leading term to the remainder
      CommPoly lt(F, p.nvars());
      lt = CommPoly::constant(F, p.nvars(), p.leading_coeff())
               .monomial_times(p.leading_exp(), F->one());
      remainder = remainder + lt;
      p = p - lt;
    }
  }
  return remainder;
}

// Buchberger with the coprime-leading-term criterion and a pair-queue cap.
// Returns the reduced Groebner basis (idempotent).
inline std::vector<CommPoly> buchberger(const CommIdeal& ideal, size_t pair_cap = 100000) {
  if (ideal.vars.size() > 8) throw Unsupported("buchberger: more than 8 variables");
  std::vector<CommPoly> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return {};
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > pair_cap) throw ResourceExhausted("buchberger: pair queue cap exceeded");
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exponent &ei = basis[i].leading_exp(), &ej = basis[j].leading_exp();
    Exponent l = exp_lcm(ei, ej);
    if (l == exp_add(ei, ej)) continue;  // coprime leading terms: S-poly reduces to 0
    CommPoly s = basis[i].monomial_times(exp_sub(l, ei), basis[i].field()->one()) -
                 basis[j].monomial_times(exp_sub(l, ej), basis[j].field()->one());
    CommPoly r = normal_form(std::move(s), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  // reduce: drop members whose leading terms are divisible by another's, then
  // fully inter-reduce
  std::vector<CommPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (exp_divides(basis[j].leading_exp(), basis[i].leading_exp())) {
        if (basis[j].leading_exp() == basis[i].leading_exp() && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<CommPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    CommPoly r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const CommPoly& a, const CommPoly& b) {
    return degrevlex_greater(a.leading_exp(), b.leading_exp());
  });
  return reduced;
}

// Number of standard monomials (monomials outside the leading-term ideal);
// nullopt means the quotient is infinite-dimensional.
inline std::optional<long long> quotient_dimension(const std::vector<CommPoly>& gb,
                                                   size_t nvars) {
  for (const auto& g : gb)
    if (!g.is_zero() && total_degree(g.leading_exp()) == 0) return 0;  // unit ideal
  // finiteness: every variable needs a pure power among the leading terms
  std::vector<int> bound(nvars, -1);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    const Exponent& e = g.leading_exp();
    int nz = -1;
    bool pure = true;
    for (size_t i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (nz >= 0) pure = false;
      nz = static_cast<int>(i);
    }
    if (pure && nz >= 0)
      bound[static_cast<size_t>(nz)] =
          bound[static_cast<size_t>(nz)] < 0 ? e[static_cast<size_t>(nz)]
                                             : std::min(bound[static_cast<size_t>(nz)], e[static_cast<size_t>(nz)]);
  }
  for (size_t i = 0; i < nvars; ++i)
    if (bound[i] < 0) return std::nullopt;
  // enumerate the staircase
  long long count = 0;
  Exponent e(nvars, 0);
  auto divisible_by_lt = [&](const Exponent& m) {
    for (const auto& g : gb)
      if (!g.is_zero() && exp_divides(g.leading_exp(), m)) return true;
    return false;
  };
  for (;;) {
    if (!divisible_by_lt(e)) ++count;
    size_t i = 0;
    for (; i < nvars; ++i) {
      if (e[i] + 1 < bound[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == nvars) break;
  }
  return count;
}

// Central codimension-one divisor: a label plus its defining ideal in the
// centre's presentation (the ideal includes the centre's own relations).
struct CentralDivisor {
  std::string label;
  CommIdeal ideal;
};

// Azumaya-locus intersection number: rank of the algebra over its centre
// times the length of the scheme-theoretic intersection, summed over all
// intersection points (the quotient dimension of I_D + I_E).
inline long long intersection_number(const CentralDivisor& D, const CentralDivisor& E,
                                     long long algebra_rank_over_centre) {
  if (algebra_rank_over_centre <= 0)
    throw DegenerateInput("intersection_number: rank must be positive");
  if (D.ideal.vars != E.ideal.vars)
    throw Error("intersection_number: divisors use different variables");
  CommIdeal sum = D.ideal;
  for (const auto& g : E.ideal.gens) sum.gens.push_back(g);
  auto gb = buchberger(sum);
  auto dim = quotient_dimension(gb, sum.vars.size());
  if (!dim)
    throw NotZeroDimensional("intersection of " + D.label + " and " + E.label +
                             " is not zero-dimensional");
  return algebra_rank_over_centre * *dim;
}

// ---- tiny expression parser for commutative polynomials ----
// Accepts the same scalar/ncpoly surface grammar restricted to the given
// variable names (used by the CLI's --divisor flags and tests).
inline CommPoly parse_comm_poly(const FieldPtr& F, const std::vector<std::string>& vars,
                                const std::string& text);

struct CommPolyParser {
  const FieldPtr& F;
  const std::vector<std::string>& vars;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  CommPoly expr() {
    CommPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
  CommPoly term() {
    CommPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }
  CommPoly factor() {
    if (accept('-')) return -factor();
    CommPoly base = atom();
    if (accept('^')) {
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw Error("comm poly: exponent expected");
      int e = std::stoi(s.substr(start, pos - start));
      CommPoly acc = CommPoly::constant(F, vars.size(), F->one());
      for (int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }
  CommPoly atom() {
    skip();
    if (accept('(')) {
      CommPoly inner = expr();
      if (!accept(')')) throw Error("comm poly: expected ')'");
      return inner;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return CommPoly::constant(F, vars.size(),
                                F->from_int(BigInt::from_string(s.substr(start, pos - start))));
    }
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return CommPoly::variable(F, vars.size(), i);
      if (F->has_constant(name))
        return CommPoly::constant(F, vars.size(), F->constant(name));
      throw Error("comm poly: unknown name " + name);
    }
    throw Error("comm poly: unexpected character");
  }
};

inline CommPoly parse_comm_poly(const FieldPtr& F, const std::vector<std::string>& vars,
                                const std::string& text) {
  CommPolyParser p{F, vars, text};
  CommPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) throw Error("comm poly: trailing input");
  return out;
}

inline CommIdeal parse_comm_ideal(const FieldPtr& F, const std::vector<std::string>& vars,
                                  const std::string& comma_separated) {
  CommIdeal ideal{F, vars, {}};
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= comma_separated.size(); ++i) {
    if (i < comma_separated.size() && comma_separated[i] == '(') ++depth;
    if (i < comma_separated.size() && comma_separated[i] == ')') --depth;
    if (i == comma_separated.size() || (comma_separated[i] == ',' && depth == 0)) {
      std::string piece = comma_separated.substr(start, i - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) ideal.gens.push_back(parse_comm_poly(F, vars, piece));
      start = i + 1;
    }
  }
  return ideal;
}

}  // namespace ncspace
