#pragma once

#include <string>
#include <vector>

#include "ncspace/extcalc.hpp"

namespace ncspace {

// Partition of a family of (simple, caller-asserted) modules into central
// fibres, with the Azumaya/ramified flag per fibre and a Mueller-consistency
// verdict for the whole family.
struct Fibre {
  CentralCharacter character;
  std::vector<int> members;        // indices into the input family
  int non_isomorphic_count = 0;    // pairwise non-isomorphic members
  bool ramified = false;           // >= 2 non-isomorphic members or some
                                   // nonzero off-diagonal Ext^1 inside
};

struct FibreReport {
  std::vector<Fibre> fibres;
  bool mueller_consistent = false;
};

inline FibreReport classify_family(const std::vector<Representation>& family,
                                   const std::vector<std::string>& central_elements) {
  FibreReport out;
  std::vector<CentralCharacter> chars;
  for (const auto& m : family) chars.push_back(central_character(m, central_elements));
  for (size_t i = 0; i < family.size(); ++i) {
    bool placed = false;
    for (auto& f : out.fibres)
      if (f.character == chars[i]) {
        f.members.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    if (!placed) {
      Fibre f;
      f.character = chars[i];
      f.members.push_back(static_cast<int>(i));
      out.fibres.push_back(std::move(f));
    }
  }
  // pairwise Ext^1 dimensions across the whole family
  const size_t r = family.size();
  std::vector<std::vector<int>> e1(r, std::vector<int>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) e1[i][j] = ext1(family[i], family[j]).dim_ext1;

  for (auto& f : out.fibres) {
    // greedy count of isomorphism classes inside the fibre
    std::vector<int> reps;
    for (int m : f.members) {
      bool found = false;
      for (int rep : reps)
        if (is_isomorphic(family[static_cast<size_t>(rep)], family[static_cast<size_t>(m)])) {
          found = true;
          break;
        }
      if (!found) reps.push_back(m);
    }
    f.non_isomorphic_count = static_cast<int>(reps.size());
    bool offdiag = false;
    for (int a : f.members)
      for (int b : f.members)
        if (a != b && e1[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0) offdiag = true;
    f.ramified = f.non_isomorphic_count >= 2 || offdiag;
  }

  // Mueller consistency: nonzero Ext^1 only inside fibres, and every
  // multi-member fibre is linked by at least one nonzero ordered pair.
  bool ok = true;
  auto fibre_of = [&](size_t i) {
    for (size_t f = 0; f < out.fibres.size(); ++f)
      for (int m : out.fibres[f].members)
        if (m == static_cast<int>(i)) return f;
    return out.fibres.size();
  };
  for (size_t i = 0; i < r && ok; ++i)
    for (size_t j = 0; j < r && ok; ++j)
      if (i != j && e1[i][j] != 0 && fibre_of(i) != fibre_of(j)) ok = false;
  for (const auto& f : out.fibres) {
    if (f.members.size() < 2) continue;
    bool linked = false;
    for (int a : f.members)
      for (int b : f.members)
        if (a != b && e1[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0) linked = true;
    if (!linked) ok = false;
  }
  out.mueller_consistent = ok;
  return out;
}

}  // namespace ncspace
