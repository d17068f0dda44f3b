#pragma once

#include <array>
#include <string>
#include <vector>

#include "bkit/bergman.hpp"
#include "bkit/oriented.hpp"
#include "bkit/rational.hpp"

namespace bkit {

// Coxeter diagram: nodes s1..sn, edges labelled m(s,s') in {3,4,6}
// (non-edges have m = 2).
struct CoxeterDiagram {
  std::vector<std::string> nodes;
  std::vector<std::array<int, 3>> edges;  // (node index, node index, m)
  std::string type;                       // "A3", "B2", ... or "custom"

  int edge_label(int a, int b) const;  // 2 when not adjacent
};

// Finite crystallographic types A (rank >= 1), B/C (rank >= 2),
// D (rank >= 3); rank guard 6.
CoxeterDiagram diagram_of_type(const std::string& type);

// Crystallographic root system realized with integer coordinates.
// Positive roots are labelled "1".."N" in the canonical order: ascending by
// (index of first nonzero coordinate, then coordinate-lexicographic), which
// reproduces the pair ordering e_i - e_j, (i,j) lexicographic, in type A.
struct RootSystem {
  CoxeterDiagram diagram;
  std::vector<RatVec> simple_roots;        // one per node
  std::vector<RatVec> positive_roots;      // canonical order
  std::vector<std::string> labels;         // "1".."N"
  std::vector<RatVec> simple_coefficients; // expansion of each positive root
  std::vector<int> simple_position;        // ground position of each alpha_s

  int rank() const { return static_cast<int>(simple_roots.size()); }
  int count() const { return static_cast<int>(positive_roots.size()); }

  // Node set supp(beta) from the exact simple-root expansion.
  Mask support(int root_index) const;
  Mask support(const std::string& label) const;
};

RootSystem build_root_system(const CoxeterDiagram& diagram);
RootSystem build_root_system(const std::string& type);

// Oriented matroid on ground set Phi+ whose all-plus tope is the
// fundamental chamber (every positive root evaluates positively on its
// interior).
OrientedMatroid coxeter_oriented_matroid(const RootSystem& rs);

// One ground-set permutation per simple reflection: beta -> s(beta), with
// alpha_s fixed (s negates it, which is the same hyperplane).
std::vector<Perm> weyl_generators(const RootSystem& rs);

}  // namespace bkit
