#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncspace/ncpoly.hpp"

namespace ncspace {

// Finitely presented associative algebra: ordered generator alphabet,
// relation list (polynomials equal to zero), declared-central generators
// (with commutators materialized in the relation list), and named central
// elements used for central characters.
class Algebra {
 public:
  FieldPtr field;
  std::vector<std::string> gens;
  std::set<int> central_gens;
  std::vector<NcPoly> relations;
  std::vector<std::pair<std::string, NcPoly>> central_elements;
  std::string name = "A";

  int gen_index(const std::string& n) const {
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == n) return static_cast<int>(i);
    return -1;
  }
  const NcPoly* central_element(const std::string& n) const {
    for (const auto& [nm, p] : central_elements)
      if (nm == n) return &p;
    return nullptr;
  }

  // Append commutators c*g - g*c for each declared-central generator, unless
  // an equal relation is already present. Keeps the relation list canonical
  // so re-running (e.g. after a print/parse round trip) is a no-op.
  void insert_central_commutators() {
    for (int c : central_gens) {
      for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        if (g == c) continue;
        if (central_gens.count(g) && g < c) continue;  // added once per pair
        NcPoly comm = NcPoly::generator(field, c) * NcPoly::generator(field, g) -
                      NcPoly::generator(field, g) * NcPoly::generator(field, c);
        if (comm.is_zero()) continue;
        bool present = false;
        for (const auto& r : relations)
          if (r == comm || r == -comm) {
            present = true;
            break;
          }
        if (!present) relations.push_back(comm);
      }
    }
  }

  void validate_structure() const {
    for (const auto& r : relations)
      for (const auto& t : r.terms())
        for (int g : t.second)
          if (g < 0 || g >= static_cast<int>(gens.size()))
            throw Error("relation references unknown generator");
  }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Diagonal action of a cyclic group <sigma | sigma^N = 1> on commuting base
// generators: sigma * x = multiplier_x * x * sigma.
struct GroupActionSpec {
  FieldPtr field;
  std::vector<std::string> base_gens;
  std::string group_gen = "g";
  long long order = 1;
  std::vector<Scalar> multipliers;  // one per base generator
};

// Crossed-product presentation k[x_1..x_n]<G>: relations
//   sigma*x_i - m_i*x_i*sigma,  sigma^N - 1,  x_i*x_j - x_j*x_i (i < j).
inline AlgebraPtr crossed_product(const GroupActionSpec& spec) {
  if (spec.order < 1) throw InvalidAction("group order must be positive");
  if (spec.multipliers.size() != spec.base_gens.size())
    throw InvalidAction("one multiplier per base generator required");
  for (const auto& m : spec.multipliers) {
    if (m.is_zero() || !m.pow(spec.order).is_one())
      throw InvalidAction("multiplier is not an N-th root of unity");
  }
  auto alg = std::make_shared<Algebra>();
  alg->field = spec.field;
  alg->gens = spec.base_gens;
  alg->gens.push_back(spec.group_gen);
  const int s = static_cast<int>(spec.base_gens.size());
  for (int i = 0; i < s; ++i) {
    NcPoly xi = NcPoly::generator(spec.field, i);
    NcPoly sg = NcPoly::generator(spec.field, s);
    alg->relations.push_back(sg * xi - spec.multipliers[static_cast<size_t>(i)] * (xi * sg));
  }
  alg->relations.push_back(NcPoly::generator(spec.field, s).pow(static_cast<int>(spec.order)) -
                           NcPoly::scalar(spec.field->one()));
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      NcPoly xi = NcPoly::generator(spec.field, i);
      NcPoly xj = NcPoly::generator(spec.field, j);
      alg->relations.push_back(xi * xj - xj * xi);
    }
  alg->validate_structure();
  return alg;
}

}  // namespace ncspace
