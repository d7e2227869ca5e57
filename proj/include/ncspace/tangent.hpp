#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "ncspace/extcalc.hpp"

namespace ncspace {

// Directed tangent-space graph of a module family: entry (i, j) of ext1 is
// dim Ext^1(M_i, M_j). No symmetry is assumed; closeness cares about
// direction. The adjacency matrix of the graph is the ext1 matrix itself.
struct TangentGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<long long>> ext0;
  std::vector<std::vector<long long>> ext1;

  const std::vector<std::vector<long long>>& adjacency() const { return ext1; }
};

inline int tangent_thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("NCSPACE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = std::min(cap, v);
  }
  return cap < 1 ? 1 : cap;
}

// All r^2 ordered-pair Ext^0/Ext^1 dimensions; deterministic given family
// order. Pairs are computed concurrently up to the NCSPACE_THREADS cap.
inline TangentGraph tangent_graph(const std::vector<Representation>& family) {
  if (family.empty()) throw DegenerateInput("tangent_graph: empty family");
  for (size_t i = 1; i < family.size(); ++i) check_same_algebra(family[0], family[i]);
  const int r = static_cast<int>(family.size());
  TangentGraph g;
  for (const auto& m : family) g.vertices.push_back(m.label);
  g.ext0.assign(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
  g.ext1.assign(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0));
  const int pairs = r * r;
  int threads = std::min(tangent_thread_cap(), pairs);
  auto worker = [&](int tid) {
    for (int p = tid; p < pairs; p += threads) {
      int i = p / r, j = p % r;
      ExtReport rep = ext1(family[static_cast<size_t>(i)], family[static_cast<size_t>(j)]);
      g.ext0[static_cast<size_t>(i)][static_cast<size_t>(j)] = rep.dim_hom;
      g.ext1[static_cast<size_t>(i)][static_cast<size_t>(j)] = rep.dim_ext1;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return g;
}

// Tangent-level hull skeleton: the generator-count matrix of the
// pro-representing hull. Diagonal entries are formal power-series generator
// counts, off-diagonal entries bimodule generator counts; obstruction data is
// absent by construction.
struct HullSkeleton {
  std::vector<std::vector<long long>> counts;  // equals the ext1 matrix
  std::vector<std::vector<std::string>> rendered;
};

inline HullSkeleton hull_skeleton(const TangentGraph& g, const std::string& base_field_name = "k") {
  HullSkeleton h;
  h.counts = g.ext1;
  const size_t r = g.ext1.size();
  h.rendered.assign(r, std::vector<std::string>(r));
  auto gens = [](const std::string& stem, long long n, size_t i, size_t j) {
    std::string out;
    for (long long k = 1; k <= n; ++k) {
      if (k > 1) out += ",";
      out += stem + std::to_string(i + 1) + std::to_string(j + 1);
      if (n > 1) out += "^" + std::to_string(k);
    }
    return out;
  };
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      long long n = g.ext1[i][j];
      if (i == j)
        h.rendered[i][j] = n == 0 ? base_field_name
                                  : base_field_name + "<<" + gens("t", n, i, j) + ">>";
      else
        h.rendered[i][j] = n == 0 ? "0" : "<" + gens("t", n, i, j) + ">";
    }
  return h;
}

// Characteristic polynomial of the adjacency matrix, exact.
inline IntPoly adjacency_char_poly(const TangentGraph& g) {
  auto F = Field::rationals();
  const int r = static_cast<int>(g.ext1.size());
  Mat m(F, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m.at(i, j) = F->from_int(g.ext1[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return char_poly(m);
}

enum class HeightMode { Single, Product };

// Non-commutative height: eigenvalues of the adjacency matrix via the exact
// characteristic polynomial and the certified root finder. Mode Single
// returns max |lambda|; mode Product raises it to the number of archimedean
// embeddings of the interpretation field.
inline double nc_height(const TangentGraph& g, const FieldPtr& field,
                        HeightMode mode = HeightMode::Single, double tol = 1e-12) {
  if (!field->is_char0())
    throw NoEmbeddings("nc_height: characteristic-0 interpretation field required");
  IntPoly cp = adjacency_char_poly(g);
  double maxmod = 0.0;
  if (cp.degree() > 0)
    for (const auto& z : poly_roots_complex(cp, tol)) maxmod = std::max(maxmod, std::abs(z));
  if (mode == HeightMode::Single) return maxmod;
  size_t n = complex_embeddings(field).size();
  double out = 1.0;
  for (size_t i = 0; i < n; ++i) out *= maxmod;
  return out;
}

// Deterministic DOT rendering; one labelled arrow per nonzero (i, j).
inline std::string export_dot(const TangentGraph& g) {
  std::string out = "digraph tangent {\n";
  for (const auto& v : g.vertices) out += "  \"" + v + "\";\n";
  for (size_t i = 0; i < g.ext1.size(); ++i)
    for (size_t j = 0; j < g.ext1[i].size(); ++j)
      if (g.ext1[i][j] != 0)
        out += "  \"" + g.vertices[i] + "\" -> \"" + g.vertices[j] +
               "\" [label=\"" + std::to_string(g.ext1[i][j]) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace ncspace
