#pragma once

#include <set>
#include <string>
#include <vector>

#include "bkit/poset.hpp"
#include "bkit/util.hpp"

namespace bkit {

struct SimpleGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<int, int>> edges;  // no loops, no multi-edges

  static SimpleGraph make(std::vector<std::string> nodes,
                          std::vector<std::pair<int, int>> edges);
  int n() const { return static_cast<int>(nodes.size()); }
  bool adjacent(int a, int b) const;
  // Connectivity of the induced subgraph on `subset`.
  bool connected(Mask subset) const;
};

// A tube is a proper nonempty node subset inducing a connected subgraph.
bool is_tube(const SimpleGraph& g, Mask t);
std::vector<Mask> tubes(const SimpleGraph& g);

// Default reading: disjoint tubes are adjacent when their union induces a
// connected subgraph, properness of the union notwithstanding.  The literal
// reading instead requires the union to be a tube (so a connected union
// equal to the whole node set does not count as adjacent).
bool are_compatible(const SimpleGraph& g, Mask t1, Mask t2,
                    bool literal_adjacency = false);

using Tubing = std::set<Mask>;

std::vector<Tubing> all_tubings(const SimpleGraph& g,
                                bool literal_adjacency = false);

std::string tubing_string(const SimpleGraph& g, const Tubing& t);

// Face poset of the graph associahedron: all tubings ordered by reverse
// containment (more tubes = smaller face).  Guard: at most 20 tubes.
FinitePoset face_poset(const SimpleGraph& g, bool literal_adjacency = false);

// f[d] = number of faces of dimension d; a tubing with k tubes spans the
// face of dimension (n-1) - k, so the last entry counts the whole polytope.
std::vector<long long> f_vector(const SimpleGraph& g,
                                bool literal_adjacency = false);

}  // namespace bkit
