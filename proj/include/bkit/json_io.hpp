#pragma once

#include <string>

#include "bkit/bergman.hpp"
#include "bkit/coxeter.hpp"
#include "bkit/matroid.hpp"
#include "bkit/oriented.hpp"
#include "bkit/poset.hpp"
#include "bkit/tubing.hpp"

namespace bkit {

// Matroid schema:
//   {"type":"matrix",   "labels":[...], "columns":[["p/q",...],...]}
//   {"type":"circuits", "labels":[...], "circuits":[[...],...]}
Matroid matroid_from_json_text(const std::string& text);
std::string matroid_to_json_text(const Matroid& m);

// Graph schema: {"nodes":[...], "edges":[[a,b],...]} with node names.
SimpleGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const SimpleGraph& g);

// Diagram schema: {"nodes":[...], "edges":[[s,t,m],...]}; accepted for the
// tubings side only (no root generation).
CoxeterDiagram diagram_from_json_text(const std::string& text);

// Poset emitters: {"elements":[...], "covers":[[lower,upper],...]} and a
// DOT digraph whose nodes carry a height annotation.
std::string poset_to_json_text(const FinitePoset& p);
std::string poset_to_dot(const FinitePoset& p);

std::string complex_to_json_text(const SimplicialComplex& k);

// {"fine":{...}, "coarse":{"cells":[{"id","forest","member_flags"}...],
//  "covers":[[id,id],...]}}
std::string bergman_to_json_text(const Matroid& m,
                                 const SimplicialComplex& fine,
                                 const CoarseComplex& coarse);

std::string forest_to_dot(const LabeledForest& forest,
                          const std::vector<std::string>& labels);
std::string forest_to_json_text(const LabeledForest& forest,
                                const std::vector<std::string>& labels);

std::string extension_to_json_text(const AffineExtension& ext);

}  // namespace bkit
