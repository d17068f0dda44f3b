#include "bkit/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bkit {

SimpleGraph graph_of_diagram(const CoxeterDiagram& d) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : d.edges) edges.emplace_back(e[0], e[1]);
  return SimpleGraph::make(d.nodes, edges);
}

Thm1Result verify_thm1(const std::string& type, bool literal_adjacency) {
  RootSystem rs = build_root_system(type);
  OrientedMatroid om = coxeter_oriented_matroid(rs);
  const Matroid& m = om.underlying();
  SimpleGraph graph = graph_of_diagram(rs.diagram);

  PositiveBergman pb = positive_bergman(om);
  FinitePoset cell_poset = pb.coarse.poset();
  FinitePoset tubing_poset = face_poset(graph, literal_adjacency);

  Thm1Result res;
  res.cell_f_vector = pb.coarse.f_vector();
  res.tubing_f_vector = f_vector(graph, literal_adjacency);
  res.cell_count = static_cast<size_t>(pb.coarse.size());
  res.tubing_count = static_cast<size_t>(tubing_poset.size());

  std::map<std::string, std::string> cell_to_tubing;
  for (const CoarseCell& c : pb.coarse.cells) {
    Tubing t =
        psi(m, rs.simple_position, pb.positive_flats, c.representative());
    cell_to_tubing[c.id(pb.coarse.ground_labels)] = tubing_string(graph, t);
  }
  AntiIsoResult anti =
      check_anti_isomorphism(cell_poset, tubing_poset, cell_to_tubing);
  res.ok = anti.ok;
  res.witness = anti.witness;
  return res;
}

bool coarse_equals_nested(const Matroid& m, std::string* witness) {
  CoarseComplex coarse = bergman_coarse(m);
  std::vector<Mask> comps = m.connected_components();
  std::set<std::set<Mask>> nested_rooted;
  for (const auto& ns : nested_sets_of_matroid(m)) {
    std::set<Mask> rooted = ns;
    for (Mask c : comps) rooted.insert(c);
    nested_rooted.insert(rooted);
  }
  std::set<std::set<Mask>> cell_forests;
  for (const CoarseCell& c : coarse.cells) {
    if (c.forests.size() != 1) {
      if (witness)
        *witness = "cell with several forests: " + c.id(coarse.ground_labels);
      return false;
    }
    if (!cell_forests.insert(*c.forests.begin()).second) {
      if (witness)
        *witness = "two cells share a forest: " + c.id(coarse.ground_labels);
      return false;
    }
  }
  if (cell_forests != nested_rooted) {
    if (witness) *witness = "cell label sets differ from the nested sets";
    return false;
  }
  return true;
}

Thm2Result verify_thm2(const std::string& type) {
  RootSystem rs = build_root_system(type);
  OrientedMatroid om = coxeter_oriented_matroid(rs);
  const Matroid& m = om.underlying();

  Thm2Result res;
  res.fs = fs_criterion(m);
  CoarseComplex coarse = bergman_coarse(m);
  res.cell_count = static_cast<size_t>(coarse.size());
  res.nested_count = nested_sets_of_matroid(m).size();

  std::string witness;
  bool equal = coarse_equals_nested(m, &witness);
  bool order_ok = true;
  if (equal) {
    // The cell order must be label-set inclusion.
    for (int a = 0; a < coarse.size() && order_ok; ++a)
      for (int b = 0; b < coarse.size() && order_ok; ++b) {
        const auto& fa = *coarse.cells[static_cast<size_t>(a)].forests.begin();
        const auto& fb = *coarse.cells[static_cast<size_t>(b)].forests.begin();
        bool incl = std::includes(fb.begin(), fb.end(), fa.begin(), fa.end());
        bool leq =
            coarse.leq[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0;
        if (incl != leq) {
          order_ok = false;
          witness = "face order disagrees with label-set inclusion";
        }
      }
  }
  res.ok = equal && order_ok && res.fs;
  res.witness = witness;
  return res;
}

CoverResult verify_cover(const OrientedMatroid& om, std::uint64_t seed) {
  CoverResult res;
  AffineExtension ext = om.generic_extension(seed);
  res.bounded = ext.bounded_topes();
  res.bounded_count = res.bounded.size();
  res.mu = om.underlying().mu();
  res.beta = ext.extension_matroid().beta();
  long long abs_mu = res.mu < 0 ? -res.mu : res.mu;
  res.counts_ok = static_cast<long long>(res.bounded_count) == abs_mu &&
                  static_cast<long long>(res.bounded_count) == res.beta;
  CoverReport rep = covers(om, res.bounded);
  res.covered = rep.covered;
  if (!rep.covered && rep.witness) {
    for (Mask f : rep.witness->chain) {
      if (!res.witness.empty()) res.witness += " < ";
      res.witness += om.underlying().set_string(f);
    }
  }
  return res;
}

}  // namespace bkit
