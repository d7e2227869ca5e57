#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncspace/presentation.hpp"

namespace ncspace {

// ---- parsed document ----

struct ParsedModule {
  std::string name;
  int dim = 0;
  std::map<int, Mat> mats;  // generator index -> matrix
};

struct Document {
  // field declaration as written (needed for canonical reprinting)
  Field::Kind kind = Field::Kind::Q;
  long long p = 0;
  IntPoly ext;
  std::vector<std::pair<std::string, IntPoly>> binds;

  FieldPtr field;
  AlgebraPtr algebra;
  std::vector<ParsedModule> modules;

  const ParsedModule* module(const std::string& name) const {
    for (const auto& m : modules)
      if (m.name == name) return &m;
    return nullptr;
  }
};

// ---- lexer ----

namespace dsl {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;

  void bump() {
    if (pos_ < src_.size() && src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
    cur_ = Token{Tok::End, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    cur_.line = line_;
    cur_.col = col_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      cur_.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        cur_.text.push_back(src_[pos_]);
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        cur_.text.push_back(src_[pos_]);
        bump();
      }
    } else {
      cur_.kind = Tok::Punct;
      cur_.text.push_back(c);
      bump();
    }
  }
};

}  // namespace dsl

// ---- parser ----

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Document parse() {
    Document doc;
    parse_field_decl(doc);
    parse_algebra_decl(doc);
    while (lex_.peek().kind != dsl::Tok::End) parse_module_decl(doc);
    return doc;
  }

 private:
  dsl::Lexer lex_;
  std::vector<std::string> gens_;
  FieldPtr field_;

  [[noreturn]] void fail(const dsl::Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg + (t.text.empty() ? "" : " near '" + t.text + "'"));
  }
  dsl::Token expect_ident(const std::string& what) {
    auto t = lex_.next();
    if (t.kind != dsl::Tok::Ident) fail(t, "expected " + what);
    return t;
  }
  dsl::Token expect_keyword(const std::string& kw) {
    auto t = lex_.next();
    if (t.kind != dsl::Tok::Ident || t.text != kw) fail(t, "expected '" + kw + "'");
    return t;
  }
  void expect_punct(const std::string& p) {
    auto t = lex_.next();
    if (t.kind != dsl::Tok::Punct || t.text != p) fail(t, "expected '" + p + "'");
  }
  bool accept_punct(const std::string& p) {
    if (lex_.peek().kind == dsl::Tok::Punct && lex_.peek().text == p) {
      lex_.next();
      return true;
    }
    return false;
  }
  long long expect_int() {
    auto t = lex_.next();
    if (t.kind != dsl::Tok::Int) fail(t, "expected integer");
    return std::stoll(t.text);
  }

  // univariate integer polynomial in the variable 'x'
  IntPoly parse_int_poly() {
    auto resolver = [this](const dsl::Token& t) -> NcPoly {
      if (t.text == "x") return NcPoly::generator(Field::rationals(), 0);
      fail(t, "only 'x' may appear in an integer polynomial");
    };
    NcPoly p = parse_expr(Field::rationals(), resolver);
    IntPoly out;
    for (const auto& [coeff, w] : p.terms()) {
      Rational r = coeff.rational_value();
      if (!r.is_integer()) throw Error("integer polynomial has fractional coefficient");
      size_t deg = w.size();
      if (out.c.size() <= deg) out.c.resize(deg + 1, BigInt(0));
      out.c[deg] = r.num();
    }
    out.trim();
    return out;
  }

  void parse_field_decl(Document& doc) {
    expect_keyword("field");
    auto kind = expect_ident("field kind (Q, Fp, Qext, Fpext)");
    if (kind.text == "Q") {
      doc.kind = Field::Kind::Q;
      doc.field = Field::rationals();
    } else if (kind.text == "Fp") {
      doc.kind = Field::Kind::Fp;
      doc.p = expect_int();
      doc.field = Field::prime(doc.p);
    } else if (kind.text == "Qext") {
      doc.kind = Field::Kind::QExt;
      doc.ext = parse_int_poly();
      doc.field = Field::extension_of_q(doc.ext);
    } else if (kind.text == "Fpext") {
      doc.kind = Field::Kind::FpExt;
      doc.p = expect_int();
      doc.ext = parse_int_poly();
      doc.field = Field::extension_of_fp(doc.p, doc.ext);
    } else {
      fail(kind, "unknown field kind");
    }
    if (doc.field->degree() > 1) doc.field->bind_constant("t", doc.field->generator());
    while (lex_.peek().kind == dsl::Tok::Ident && lex_.peek().text == "bind") {
      lex_.next();
      auto name = expect_ident("constant name");
      expect_keyword("root_of");
      IntPoly poly = parse_int_poly();
      Scalar value = doc.field->find_root(poly);  // throws ConstantUnresolvable
      doc.field->bind_constant(name.text, value);
      doc.binds.emplace_back(name.text, poly);
    }
    expect_punct(";");
    field_ = doc.field;
  }

  void parse_algebra_decl(Document& doc) {
    expect_keyword("algebra");
    auto alg = std::make_shared<Algebra>();
    alg->field = field_;
    alg->name = expect_ident("algebra name").text;
    expect_punct("{");
    expect_keyword("gens");
    while (lex_.peek().kind == dsl::Tok::Ident) {
      auto g = lex_.next();
      if (alg->gen_index(g.text) >= 0) fail(g, "duplicate generator");
      if (field_->has_constant(g.text))
        fail(g, "generator name collides with a bound constant");
      alg->gens.push_back(g.text);
    }
    if (alg->gens.empty()) fail(lex_.peek(), "at least one generator required");
    expect_punct(";");
    gens_ = alg->gens;
    if (lex_.peek().kind == dsl::Tok::Ident && lex_.peek().text == "central") {
      lex_.next();
      while (lex_.peek().kind == dsl::Tok::Ident) {
        auto g = lex_.next();
        int idx = alg->gen_index(g.text);
        if (idx < 0) fail(g, "unknown generator in central list");
        alg->central_gens.insert(idx);
      }
      expect_punct(";");
    }
    while (lex_.peek().kind == dsl::Tok::Ident &&
           (lex_.peek().text == "rel" || lex_.peek().text == "zelt")) {
      auto kw = lex_.next();
      if (kw.text == "rel") {
        alg->relations.push_back(parse_ncpoly());
      } else {
        auto name = expect_ident("central element name");
        for (const auto& [n, p] : alg->central_elements)
          if (n == name.text) fail(name, "duplicate central element");
        expect_punct("=");
        alg->central_elements.emplace_back(name.text, parse_ncpoly());
      }
      expect_punct(";");
    }
    expect_punct("}");
    alg->insert_central_commutators();
    alg->validate_structure();
    doc.algebra = alg;
  }

  void parse_module_decl(Document& doc) {
    expect_keyword("module");
    ParsedModule mod;
    mod.name = expect_ident("module name").text;
    if (doc.module(mod.name)) throw Error("duplicate module name " + mod.name);
    expect_keyword("dim");
    mod.dim = static_cast<int>(expect_int());
    if (mod.dim <= 0) throw ShapeError("module dimension must be positive");
    expect_punct("{");
    while (lex_.peek().kind == dsl::Tok::Ident) {
      auto g = expect_ident("generator name");
      int idx = doc.algebra->gen_index(g.text);
      if (idx < 0) fail(g, "unknown generator in module");
      if (mod.mats.count(idx)) fail(g, "duplicate matrix for generator");
      expect_punct("=");
      mod.mats.emplace(idx, parse_matrix(mod.dim));
      expect_punct(";");
    }
    if (mod.mats.empty()) fail(lex_.peek(), "module needs at least one matrix");
    expect_punct("}");
    doc.modules.push_back(std::move(mod));
  }

  Mat parse_matrix(int dim) {
    auto open = lex_.peek();
    expect_punct("[");
    std::vector<std::vector<Scalar>> rows;
    for (;;) {
      expect_punct("[");
      std::vector<Scalar> row;
      for (;;) {
        row.push_back(parse_scalar());
        if (!accept_punct(",")) break;
      }
      expect_punct("]");
      rows.push_back(std::move(row));
      if (!accept_punct(",")) break;
    }
    expect_punct("]");
    size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n)
        throw ShapeError("matrix at line " + std::to_string(open.line) + " is not square");
    if (static_cast<int>(n) != dim)
      throw ShapeError("matrix at line " + std::to_string(open.line) +
                       " has size " + std::to_string(n) + ", module dim is " +
                       std::to_string(dim));
    Mat m(field_, dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
  }

  Scalar parse_scalar() {
    auto at = lex_.peek();
    auto resolver = [this](const dsl::Token& t) -> NcPoly {
      if (field_->has_constant(t.text)) return NcPoly::scalar(field_->constant(t.text));
      fail(t, "unknown constant in scalar expression");
    };
    NcPoly p = parse_expr(field_, resolver);
    if (p.is_zero()) return field_->zero();
    if (p.term_count() != 1 || !p.terms()[0].second.empty())
      fail(at, "matrix entry must be a scalar expression");
    return p.terms()[0].first;
  }

  NcPoly parse_ncpoly() {
    auto resolver = [this](const dsl::Token& t) -> NcPoly {
      int idx = -1;
      for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == t.text) idx = static_cast<int>(i);
      if (idx >= 0) return NcPoly::generator(field_, idx);
      if (field_->has_constant(t.text)) return NcPoly::scalar(field_->constant(t.text));
      fail(t, "unknown generator or constant");
    };
    return parse_expr(field_, resolver);
  }

  // expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
  // factor := ('-')* atom ('^' INT)? ; atom := INT | NAME | '(' expr ')'
  using Resolver = std::function<NcPoly(const dsl::Token&)>;

  NcPoly parse_expr(const FieldPtr& F, const Resolver& resolve) {
    NcPoly acc = parse_term(F, resolve);
    for (;;) {
      if (accept_punct("+")) {
        acc = acc + parse_term(F, resolve);
      } else if (accept_punct("-")) {
        acc = acc - parse_term(F, resolve);
      } else {
        return acc;
      }
    }
  }
  NcPoly parse_term(const FieldPtr& F, const Resolver& resolve) {
    NcPoly acc = parse_factor(F, resolve);
    while (accept_punct("*")) acc = acc * parse_factor(F, resolve);
    return acc;
  }
  NcPoly parse_factor(const FieldPtr& F, const Resolver& resolve) {
    if (accept_punct("-")) return -parse_factor(F, resolve);
    NcPoly base = parse_atom(F, resolve);
    if (accept_punct("^")) {
      long long e = expect_int();
      if (e < 0 || e > 64) fail(lex_.peek(), "exponent out of range");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }
  NcPoly parse_atom(const FieldPtr& F, const Resolver& resolve) {
    auto t = lex_.next();
    if (t.kind == dsl::Tok::Int)
      return NcPoly::scalar(F->from_int(BigInt::from_string(t.text)));
    if (t.kind == dsl::Tok::Ident) return resolve(t);
    if (t.kind == dsl::Tok::Punct && t.text == "(") {
      NcPoly inner = parse_expr(F, resolve);
      expect_punct(")");
      return inner;
    }
    fail(t, "expected integer, name, or parenthesized expression");
  }
};

inline Document parse_document(const std::string& src) { return Parser(src).parse(); }

// ---- canonical printer (deterministic, grammar-compatible) ----

inline std::string print_document(const Document& doc) {
  std::string out = "field ";
  switch (doc.kind) {
    case Field::Kind::Q: out += "Q"; break;
    case Field::Kind::Fp: out += "Fp " + std::to_string(doc.p); break;
    case Field::Kind::QExt: out += "Qext " + doc.ext.to_string(); break;
    case Field::Kind::FpExt:
      out += "Fpext " + std::to_string(doc.p) + " " + doc.ext.to_string();
      break;
  }
  for (const auto& [name, poly] : doc.binds)
    out += " bind " + name + " root_of " + poly.to_string();
  out += ";\n";
  const Algebra& A = *doc.algebra;
  out += "algebra " + A.name + " {\n  gens";
  for (const auto& g : A.gens) out += " " + g;
  out += ";\n";
  if (!A.central_gens.empty()) {
    out += "  central";
    for (int c : A.central_gens) out += " " + A.gens[static_cast<size_t>(c)];
    out += ";\n";
  }
  for (const auto& r : A.relations) out += "  rel " + r.to_string(A.gens) + ";\n";
  for (const auto& [name, p] : A.central_elements)
    out += "  zelt " + name + " = " + p.to_string(A.gens) + ";\n";
  out += "}\n";
  for (const auto& m : doc.modules) {
    out += "module " + m.name + " dim " + std::to_string(m.dim) + " {\n";
    for (const auto& [gi, mat] : m.mats) {
      out += "  " + A.gens[static_cast<size_t>(gi)] + " = [";
      for (int i = 0; i < mat.rows(); ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < mat.cols(); ++j) {
          if (j) out += ",";
          out += mat.at(i, j).to_string();
        }
        out += "]";
      }
      out += "];\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace ncspace
