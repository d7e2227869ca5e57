#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ncspace/repmod.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(NCSPACE_FIXTURES_DIR) + "/" + name;
}

inline ncspace::Document load_fixture(const std::string& name) {
  return ncspace::parse_document(read_file(fixture_path(name)));
}

inline ncspace::Representation rep_of(const ncspace::Document& doc, const std::string& name) {
  const auto* pm = doc.module(name);
  if (!pm) throw std::runtime_error("no module " + name);
  return ncspace::make_representation(doc.algebra, *pm);
}

}  // namespace testutil
