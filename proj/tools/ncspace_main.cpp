// ncspace: batch front end for the exact noncommutative-space engine.
// Subcommands: validate | ext | graph | height | classify | intersect.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncspace/cli.hpp"

namespace {

void emit(const ncspace::cli::CommandResult& r, const std::string& out_path,
          const std::string& dot_path) {
  if (out_path.empty()) {
    std::cout << r.report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << r.report;
  }
  if (!dot_path.empty() && !r.dot.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    dot << r.dot;
  }
}

int map_exception() {
  try {
    throw;
  } catch (const ncspace::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ncspace::cli::UnknownModule& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const ncspace::DegenerateInput& e) {
    std::cerr << e.what() << "\n";
    return 5;
  } catch (const ncspace::NotZeroDimensional& e) {
    std::cerr << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    // relation violations on module load count as validation failures
    return std::string(e.what()).find("violates relation") != std::string::npos ? 3 : 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finitely presented algebras", "ncspace"};
  app.require_subcommand(1);

  std::string out_path, dot_path;
  app.add_option("--out", out_path, "write the JSON report here (default stdout)");

  auto* v = app.add_subcommand("validate", "parse a source and check every module");
  std::string v_src;
  v->add_option("source", v_src, "input .ncs file")->required();

  auto* e = app.add_subcommand("ext", "Ext^0/Ext^1 dimensions and cocycles for a pair");
  std::string e_src, e_m, e_n;
  e->add_option("source", e_src)->required();
  e->add_option("M", e_m, "source module")->required();
  e->add_option("N", e_n, "target module")->required();

  auto* g = app.add_subcommand("graph", "tangent graph, hull skeleton, nc height");
  std::string g_src, g_family, g_mode = "single", g_field;
  g->add_option("source", g_src)->required();
  g->add_option("--family", g_family, "comma-separated module names")->required();
  g->add_option("--height-mode", g_mode, "single|product (default single)");
  g->add_option("--height-field", g_field, "char-0 interpretation field spec");
  g->add_option("--dot", dot_path, "write the DOT digraph here");

  auto* c = app.add_subcommand("classify", "central fibres and Mueller consistency");
  std::string c_src, c_family, c_central;
  c->add_option("source", c_src)->required();
  c->add_option("--family", c_family, "comma-separated module names")->required();
  c->add_option("--central", c_central, "comma-separated central element names")->required();

  auto* h = app.add_subcommand("height", "weil | central | rep | total");
  std::string h_sub, h_field = "Q", h_coords, h_points, h_matrices, h_central;
  double h_rep = 0.0, h_nc = 0.0;
  bool h_arch = false;
  h->add_option("kind", h_sub, "weil|central|rep|total")->required();
  h->add_option("--field", h_field, "field spec, e.g. Q or \"Qext x^2-2\"");
  h->add_option("--coords", h_coords, "projective coordinates, comma separated");
  h->add_option("--points", h_points, "semicolon-separated coordinate lists");
  h->add_option("--matrices", h_matrices, "semicolon-separated matrix literals");
  h->add_flag("--archimedean", h_arch, "include archimedean places in h_rep");
  h->add_option("--central", h_central, "central height entries for 'total'");
  h->add_option("--rep", h_rep, "representation height entry for 'total'");
  h->add_option("--nc", h_nc, "noncommutative height entry for 'total'");

  auto* ix = app.add_subcommand("intersect", "Azumaya-locus intersection number");
  std::string ix_src, ix_field = "Q", ix_vars, ix_d, ix_e;
  long long ix_rank = 0;
  ix->add_option("source", ix_src, "optional .ncs source supplying the field");
  ix->add_option("--field", ix_field, "field spec when no source is given");
  ix->add_option("--vars", ix_vars, "central variable names")->required();
  ix->add_option("--divisor-d", ix_d, "generators of I_D, comma separated")->required();
  ix->add_option("--divisor-e", ix_e, "generators of I_E, comma separated")->required();
  ix->add_option("--rank", ix_rank, "algebra rank over its centre")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ncspace::cli::CommandResult r;
    if (*v) {
      r = ncspace::cli::cmd_validate(v_src);
    } else if (*e) {
      r = ncspace::cli::cmd_ext(e_src, e_m, e_n);
    } else if (*g) {
      r = ncspace::cli::cmd_graph(g_src, ncspace::cli::split_list(g_family), g_mode, g_field);
    } else if (*c) {
      r = ncspace::cli::cmd_classify(c_src, ncspace::cli::split_list(c_family),
                                     ncspace::cli::split_list(c_central));
    } else if (*h) {
      r = ncspace::cli::cmd_height(h_sub, h_field, h_coords, h_points, h_matrices, h_arch,
                                   h_central, h_rep, h_nc);
    } else if (*ix) {
      std::string field_spec = ix_field;
      if (!ix_src.empty()) {
        ncspace::Document doc =
            ncspace::parse_document(ncspace::cli::read_file(ix_src));
        switch (doc.kind) {
          case ncspace::Field::Kind::Q: field_spec = "Q"; break;
          case ncspace::Field::Kind::Fp:
            field_spec = "Fp " + std::to_string(doc.p);
            break;
          case ncspace::Field::Kind::QExt:
            field_spec = "Qext " + doc.ext.to_string();
            break;
          case ncspace::Field::Kind::FpExt:
            field_spec = "Fpext " + std::to_string(doc.p) + " " + doc.ext.to_string();
            break;
        }
        for (const auto& [name, poly] : doc.binds)
          field_spec += " bind " + name + " root_of " + poly.to_string();
      }
      r = ncspace::cli::cmd_intersect(field_spec, ncspace::cli::split_list(ix_vars), ix_d,
                                      ix_e, ix_rank);
    }
    emit(r, out_path, dot_path);
    return r.exit_code;
  } catch (...) {
    return map_exception();
  }
}
