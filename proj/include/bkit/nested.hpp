#pragma once

#include <set>
#include <vector>

#include "bkit/bergman.hpp"
#include "bkit/matroid.hpp"
#include "bkit/oriented.hpp"
#include "bkit/poset.hpp"

namespace bkit {

// Elements y > 0 whose lower interval [0, y] is not a nontrivial direct
// product of intervals [0, x].  Requires a lattice.
std::vector<int> irreducibles(const FinitePoset& lattice);

// A set of irreducibles is nested when every antichain of size >= 2 in it
// has a reducible join.
bool is_nested(const FinitePoset& lattice, const std::vector<int>& irr,
               const std::vector<int>& subset);

// The (minimal) nested set complex: vertices are the irreducibles, faces
// the nested sets.  Guard on lattice size.
SimplicialComplex nested_complex(const FinitePoset& lattice);

// All nested sets, as sorted lists of lattice element indices (the empty
// set included).
std::vector<std::vector<int>> nested_sets(const FinitePoset& lattice);

// For matroid flat lattices the irreducibles are exactly the connected
// flats; fast path used by the matroid-facing helpers below.
std::vector<Mask> connected_flats(const Matroid& m);

// Nested sets of the flat lattice, as sets of flats.
std::vector<std::set<Mask>> nested_sets_of_matroid(const Matroid& m);

// Membership test: all members connected flats, and every antichain of
// size >= 2 joins to a disconnected flat.
bool is_nested_flats(const Matroid& m, const std::vector<Mask>& flats);

// Label sets of the forests of all valid flags (roots included, so every
// member contains the connected components of M).
std::vector<std::set<Mask>> forest_label_sets(const Matroid& m);

// Label sets of forests of flags of positive flats.
std::vector<std::set<Mask>> positive_forest_label_sets(
    const OrientedMatroid& om);

}  // namespace bkit
