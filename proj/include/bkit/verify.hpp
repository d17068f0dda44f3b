#pragma once

#include <string>
#include <vector>

#include "bkit/bergman.hpp"
#include "bkit/coxeter.hpp"
#include "bkit/nested.hpp"
#include "bkit/tubing.hpp"

namespace bkit {

SimpleGraph graph_of_diagram(const CoxeterDiagram& d);

struct Thm1Result {
  bool ok = false;
  std::string witness;
  std::vector<long long> cell_f_vector;
  std::vector<long long> tubing_f_vector;
  size_t cell_count = 0;
  size_t tubing_count = 0;
};

// Coarse positive Bergman poset vs the tubing poset of the diagram, via the
// tube map on cell forests; anti-isomorphism required.
Thm1Result verify_thm1(const std::string& type, bool literal_adjacency = false);

// Do all coarse cells carry a unique forest whose label sets biject with
// the nested sets (roots adjoined)?  On failure a witness is written.
bool coarse_equals_nested(const Matroid& m, std::string* witness = nullptr);

struct Thm2Result {
  bool ok = false;
  std::string witness;
  bool fs = false;          // connectivity criterion
  size_t cell_count = 0;
  size_t nested_count = 0;  // nested sets of the flat lattice
};

Thm2Result verify_thm2(const std::string& type);

struct CoverResult {
  size_t bounded_count = 0;
  long long mu = 0;
  long long beta = 0;
  bool counts_ok = false;
  bool covered = false;
  std::string witness;
  std::vector<SignVector> bounded;
};

CoverResult verify_cover(const OrientedMatroid& om, std::uint64_t seed);

}  // namespace bkit
