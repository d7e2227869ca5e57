#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncspace/classify.hpp"
#include "ncspace/heights.hpp"
#include "ncspace/intersect.hpp"
#include "ncspace/tangent.hpp"

namespace ncspace::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "ncspace 0.1.0";

// exit codes: 0 ok, 1 internal, 2 parse error, 3 validation failure,
// 4 unknown module, 5 degenerate input, 6 not zero-dimensional
struct CommandResult {
  int exit_code = 0;
  std::string report;  // JSON, sorted keys, LF line endings
  std::string dot;     // optional DOT payload (graph command)
};

struct UnknownModule : Error {
  explicit UnknownModule(const std::string& name) : Error("unknown module " + name) {}
};

// ---- helpers ----

inline std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// reals are rounded to 12 significant digits before serialization so reports
// are byte-identical across runs and platforms
inline double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline json finish_report(const std::string& command, const json& results,
                          const std::string* source_bytes,
                          std::vector<std::string> conventions = {}) {
  json rep;
  rep["command"] = command;
  rep["version"] = kVersion;
  rep["input_digest"] = source_bytes ? json(fnv1a64(*source_bytes)) : json(nullptr);
  rep["conventions"] = conventions;
  rep["results"] = results;
  return rep;
}

inline std::string dump_report(const json& rep) { return rep.dump(2) + "\n"; }

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "Q" | "Fp 7" | "Qext x^2-2" | "Fpext 2 x^2+x+1" (binds allowed)
inline FieldPtr parse_field_spec(const std::string& spec) {
  Document doc = parse_document("field " + spec + "; algebra Zz { gens qq_; }");
  return doc.field;
}

inline Scalar parse_scalar_expr(const FieldPtr& F, const std::string& text) {
  CommPoly p = parse_comm_poly(F, {}, text);
  if (p.is_zero()) return F->zero();
  return p.terms()[0].second;
}

// "[[a,b],[c,d]]" with scalar-expression entries
inline Mat parse_matrix_literal(const FieldPtr& F, const std::string& text) {
  size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw Error(std::string("matrix literal: expected '") + c + "'");
    ++pos;
  };
  expect('[');
  std::vector<std::vector<Scalar>> rows;
  for (;;) {
    expect('[');
    std::vector<Scalar> row;
    for (;;) {
      skip();
      size_t start = pos;
      int depth = 0;
      while (pos < text.size() &&
             (depth > 0 || (text[pos] != ',' && text[pos] != ']'))) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      row.push_back(parse_scalar_expr(F, text.substr(start, pos - start)));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw ShapeError("matrix literal is not square");
  Mat m(F, static_cast<int>(n), static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

inline json int_matrix_to_json(const std::vector<std::vector<long long>>& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (long long v : r) row.push_back(v);
    rows.push_back(row);
  }
  return rows;
}

inline Representation load_module(const Document& doc, const std::string& name) {
  const ParsedModule* pm = doc.module(name);
  if (!pm) throw UnknownModule(name);
  Representation rep{doc.algebra, pm->dim, pm->mats, pm->name};
  auto viols = validate(rep);
  if (!viols.empty())
    throw Error("module " + name + " violates relation " + viols[0].relation);
  return rep;
}

// ---- commands ----

inline CommandResult cmd_validate(const std::string& source_path) {
  std::string src = read_file(source_path);
  Document doc;
  try {
    doc = parse_document(src);
  } catch (const ParseError& e) {
    json res;
    res["error"] = e.what();
    return {2, dump_report(finish_report("validate", res, &src)), ""};
  }
  json res;
  res["algebra"]["name"] = doc.algebra->name;
  res["algebra"]["generators"] = doc.algebra->gens;
  res["algebra"]["relations"] = doc.algebra->relations.size();
  json zelts = json::array();
  for (const auto& [n, p] : doc.algebra->central_elements) zelts.push_back(n);
  res["algebra"]["central_elements"] = zelts;
  bool all_ok = true;
  json mods = json::array();
  for (const auto& pm : doc.modules) {
    Representation rep{doc.algebra, pm.dim, pm.mats, pm.name};
    json m;
    m["name"] = pm.name;
    m["dim"] = pm.dim;
    try {
      auto viols = validate(rep);
      m["valid"] = viols.empty();
      json vj = json::array();
      for (const auto& v : viols) vj.push_back(v.relation);
      m["violations"] = vj;
      if (!viols.empty()) all_ok = false;
    } catch (const Error& e) {
      m["valid"] = false;
      m["violations"] = json::array({e.what()});
      all_ok = false;
    }
    mods.push_back(m);
  }
  res["modules"] = mods;
  return {all_ok ? 0 : 3, dump_report(finish_report("validate", res, &src)), ""};
}

inline CommandResult cmd_ext(const std::string& source_path, const std::string& mname,
                             const std::string& nname) {
  std::string src = read_file(source_path);
  Document doc = parse_document(src);
  Representation M = load_module(doc, mname), N = load_module(doc, nname);
  ExtReport rep = ext1(M, N);
  json res;
  res["module_m"] = mname;
  res["module_n"] = nname;
  res["dim_hom"] = rep.dim_hom;
  res["dim_der"] = rep.dim_der;
  res["dim_inner"] = rep.dim_inner;
  res["dim_ext1"] = rep.dim_ext1;
  json cocycles = json::array();
  for (const auto& t : rep.cocycles) {
    json tuple;
    for (const auto& [g, mat] : t)
      tuple[doc.algebra->gens[static_cast<size_t>(g)]] = matrix_to_json(mat);
    cocycles.push_back(tuple);
  }
  res["cocycle_basis"] = cocycles;
  return {0, dump_report(finish_report("ext", res, &src)), ""};
}

inline CommandResult cmd_graph(const std::string& source_path,
                               const std::vector<std::string>& family,
                               const std::string& height_mode = "single",
                               const std::string& height_field = "") {
  std::string src = read_file(source_path);
  Document doc = parse_document(src);
  std::vector<Representation> fam;
  for (const auto& n : family) fam.push_back(load_module(doc, n));
  TangentGraph g = tangent_graph(fam);
  HullSkeleton hull = hull_skeleton(
      g, doc.field->is_finite() ? "F" + std::to_string(doc.field->characteristic()) : "k");
  FieldPtr hf;
  std::string hf_desc;
  if (!height_field.empty()) {
    hf = parse_field_spec(height_field);
    hf_desc = height_field;
  } else if (doc.field->is_char0()) {
    hf = doc.field;
    hf_desc = "source field";
  } else {
    hf = Field::rationals();
    hf_desc = "Q (characteristic-0 lift of the residue field)";
  }
  HeightMode mode = height_mode == "product" ? HeightMode::Product : HeightMode::Single;
  double h = nc_height(g, hf, mode);
  IntPoly cp = adjacency_char_poly(g);
  json res;
  res["family"] = g.vertices;
  res["ext0"] = int_matrix_to_json(g.ext0);
  res["ext1"] = int_matrix_to_json(g.ext1);
  json hullj = json::array();
  for (const auto& row : hull.rendered) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell);
    hullj.push_back(r);
  }
  res["hull_skeleton"] = hullj;
  res["char_poly"] = cp.to_string("L");
  json eig = json::array();
  if (cp.degree() > 0)
    for (const auto& z : poly_roots_complex(cp, 1e-12)) {
      json e;
      e["re"] = round12(z.real());
      e["im"] = round12(z.imag());
      eig.push_back(e);
    }
  res["eigenvalues"] = eig;
  res["nc_height"] = round12(h);
  res["nc_height_mode"] = height_mode;
  std::vector<std::string> conv{
      "nc-height mode " + height_mode + " over " + hf_desc,
      "adjacency = ext1 matrix including diagonal loops"};
  return {0, dump_report(finish_report("graph", res, &src, conv)), export_dot(g)};
}

inline CommandResult cmd_classify(const std::string& source_path,
                                  const std::vector<std::string>& family,
                                  const std::vector<std::string>& central) {
  std::string src = read_file(source_path);
  Document doc = parse_document(src);
  std::vector<Representation> fam;
  for (const auto& n : family) fam.push_back(load_module(doc, n));
  FibreReport fr = classify_family(fam, central);
  json res;
  json fibres = json::array();
  for (const auto& f : fr.fibres) {
    json fj;
    json members = json::array();
    for (int m : f.members) members.push_back(family[static_cast<size_t>(m)]);
    fj["members"] = members;
    json ch;
    for (const auto& [name, poly] : f.character.values) {
      // degree-1 minimal polynomials z - a reported as the scalar a
      if (poly.size() == 2)
        ch[name] = (-poly[0]).to_string();
      else {
        std::string s;
        for (size_t i = poly.size(); i-- > 0;) {
          if (!s.empty()) s += " ";
          s += poly[i].to_string() + "*z^" + std::to_string(i);
        }
        ch[name] = s;
      }
    }
    fj["character"] = ch;
    fj["flag"] = f.ramified ? "ramified" : "azumaya-like";
    fj["non_isomorphic_members"] = f.non_isomorphic_count;
    fibres.push_back(fj);
  }
  res["fibres"] = fibres;
  res["mueller_consistent"] = fr.mueller_consistent;
  std::vector<std::string> conv{
      "simplicity of family members is asserted by the caller, not computed"};
  return {0, dump_report(finish_report("classify", res, &src, conv)), ""};
}

inline CommandResult cmd_height(const std::string& sub, const std::string& field_spec,
                                const std::string& coords, const std::string& points,
                                const std::string& matrices, bool archimedean,
                                const std::string& central_arg, double rep_arg,
                                double nc_arg) {
  FieldPtr F = parse_field_spec(field_spec.empty() ? "Q" : field_spec);
  json res;
  std::vector<std::string> conv;
  if (sub == "weil") {
    ProjectivePoint p{F, {}};
    for (const auto& c : split_list(coords)) p.coords.push_back(parse_scalar_expr(F, c));
    double rel = weil_height(p);
    auto [H, h] = absolute_and_log(p);
    res["relative_height"] = round12(rel);
    res["absolute_height"] = round12(H);
    res["log_height"] = round12(h);
  } else if (sub == "central") {
    std::vector<ProjectivePoint> pts;
    for (const auto& chunk : split_list(points, ';')) {
      ProjectivePoint p{F, {}};
      for (const auto& c : split_list(chunk)) p.coords.push_back(parse_scalar_expr(F, c));
      pts.push_back(std::move(p));
    }
    json hj = json::array();
    for (double h : central_height(pts)) hj.push_back(round12(h));
    res["central_heights"] = hj;
  } else if (sub == "rep") {
    std::vector<Mat> mats;
    for (const auto& chunk : split_list(matrices, ';'))
      mats.push_back(parse_matrix_literal(F, chunk));
    res["h_rep"] = round12(representation_height(F, mats, archimedean));
    res["archimedean_included"] = archimedean;
    conv.push_back("v(0) := 0 entrywise; min over all generator matrices");
    conv.push_back("split case D = K only; v normalized with v(p) = 1");
  } else if (sub == "total") {
    std::vector<double> central;
    for (const auto& c : split_list(central_arg)) central.push_back(std::stod(c));
    HeightVector v = total_height(central, rep_arg, nc_arg);
    json cj = json::array();
    for (double c : v.central) cj.push_back(round12(c));
    res["central"] = cj;
    res["representation"] = round12(v.representation);
    res["noncommutative"] = round12(v.noncommutative);
  } else {
    throw Error("unknown height subcommand " + sub);
  }
  return {0, dump_report(finish_report("height " + sub, res, nullptr, conv)), ""};
}

inline CommandResult cmd_intersect(const std::string& field_spec,
                                   const std::vector<std::string>& vars,
                                   const std::string& divisor_d,
                                   const std::string& divisor_e, long long rank) {
  FieldPtr F = parse_field_spec(field_spec.empty() ? "Q" : field_spec);
  CentralDivisor D{"D", parse_comm_ideal(F, vars, divisor_d)};
  CentralDivisor E{"E", parse_comm_ideal(F, vars, divisor_e)};
  CommIdeal sum = D.ideal;
  for (const auto& g : E.ideal.gens) sum.gens.push_back(g);
  auto gb = buchberger(sum);
  auto qdim = quotient_dimension(gb, vars.size());
  json res;
  json gbj = json::array();
  for (const auto& g : gb) gbj.push_back(g.to_string(vars));
  res["groebner_basis"] = gbj;
  if (!qdim) throw NotZeroDimensional("intersection is not zero-dimensional");
  res["quotient_dimension"] = *qdim;
  res["rank"] = rank;
  long long num = intersection_number(D, E, rank);
  res["intersection_number"] = num;
  std::vector<std::string> conv{
      "denominator ideal read as the sum I_D + I_E (scheme-theoretic intersection)",
      "total intersection number only; per-point split needs primary decomposition"};
  return {0, dump_report(finish_report("intersect", res, nullptr, conv)), ""};
}

}  // namespace ncspace::cli
