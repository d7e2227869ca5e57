#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ncspace/field.hpp"
#include "ncspace/matrix.hpp"

namespace ncspace {

// A word in the free monoid on the generator alphabet; indices into the
// presentation's generator list. The empty word is the algebra unit.
using Word = std::vector<int>;

inline bool word_deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Noncommutative polynomial in canonical merged form: terms sorted by
// degree-lex word order, no duplicate words, no zero coefficients.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(FieldPtr f) : field_(std::move(f)) {}

  static NcPoly zero(const FieldPtr& f) { return NcPoly(f); }
  static NcPoly scalar(const Scalar& s) {
    NcPoly p(s.field());
    if (!s.is_zero()) p.terms_.push_back({s, Word{}});
    return p;
  }
  static NcPoly generator(const FieldPtr& f, int gen) {
    NcPoly p(f);
    p.terms_.push_back({f->one(), Word{gen}});
    return p;
  }
  static NcPoly word(const FieldPtr& f, Word w, const Scalar& coeff) {
    NcPoly p(f);
    if (!coeff.is_zero()) p.terms_.push_back({coeff, std::move(w)});
    return p;
  }

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Scalar, Word>>& terms() const { return terms_; }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].second != b.terms_[i].second ||
          a.terms_[i].first != b.terms_[i].first)
        return false;
    return true;
  }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  friend NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    NcPoly r(a.field_ ? a.field_ : b.field_);
    std::map<Word, Scalar, WordLess> acc;
    for (const auto& t : a.terms_) acc.emplace(t.second, t.first);
    for (const auto& t : b.terms_) {
      auto it = acc.find(t.second);
      if (it == acc.end())
        acc.emplace(t.second, t.first);
      else
        it->second += t.first;
    }
    for (auto& kv : acc)
      if (!kv.second.is_zero()) r.terms_.push_back({kv.second, kv.first});
    return r;
  }
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + (-b); }
  NcPoly operator-() const {
    NcPoly r = *this;
    for (auto& t : r.terms_) t.first = -t.first;
    return r;
  }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r(a.field_ ? a.field_ : b.field_);
    std::map<Word, Scalar, WordLess> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Word w = s.second;
        w.insert(w.end(), t.second.begin(), t.second.end());
        Scalar c = s.first * t.first;
        auto it = acc.find(w);
        if (it == acc.end())
          acc.emplace(std::move(w), std::move(c));
        else
          it->second += c;
      }
    for (auto& kv : acc)
      if (!kv.second.is_zero()) r.terms_.push_back({kv.second, kv.first});
    return r;
  }
  friend NcPoly operator*(const Scalar& s, const NcPoly& p) {
    NcPoly r(p.field_);
    if (s.is_zero()) return r;
    for (const auto& t : p.terms_) r.terms_.push_back({s * t.first, t.second});
    return r;
  }
  NcPoly pow(int e) const {
    if (e < 0) throw Error("NcPoly: negative power");
    NcPoly acc = NcPoly::scalar(field_->one());
    NcPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // substitute matrices for generators; the empty word maps to the identity
  Mat eval(const std::map<int, Mat>& assignment, int dim) const {
    Mat out(field_, dim, dim);
    for (const auto& t : terms_) {
      Mat m = Mat::identity(field_, dim);
      for (int g : t.second) {
        auto it = assignment.find(g);
        if (it == assignment.end())
          throw UnboundGenerator("generator #" + std::to_string(g) +
                                 " has no assigned matrix");
        if (it->second.rows() != dim || it->second.cols() != dim)
          throw ShapeError("assigned matrix has wrong dimension");
        m = m * it->second;
      }
      out = out + t.first * m;
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& gen_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = terms_.size(); i-- > 0;) {  // highest word first
      const auto& [coeff, w] = terms_[i];
      std::string cs = coeff.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      bool compound = cs.find(' ') != std::string::npos;
      if (!out.empty()) {
        out += neg && !compound ? " - " : " + ";
        if (neg && !compound) cs = cs.substr(1);
      }
      if (w.empty()) {
        out += compound ? "(" + cs + ")" : cs;
        continue;
      }
      if (compound) {
        out += "(" + cs + ")*";
      } else if (cs != "1") {
        if (cs == "-1")
          out += "-";
        else
          out += cs + "*";
      }
      for (size_t k = 0; k < w.size();) {
        size_t run = k;
        while (run < w.size() && w[run] == w[k]) ++run;
        if (k > 0) out += "*";
        out += gen_names[static_cast<size_t>(w[k])];
        if (run - k > 1) out += "^" + std::to_string(run - k);
        k = run;
      }
    }
    return out;
  }

 private:
  struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
      return word_deglex_less(a, b);
    }
  };
  FieldPtr field_;
  std::vector<std::pair<Scalar, Word>> terms_;  // canonical ascending order
};

}  // namespace ncspace
