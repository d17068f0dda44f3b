#include "bkit/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace bkit {

using nlohmann::json;

namespace {

json ordered(const json& j) { return j; }

std::string rat_json(const Rat& q) { return rat_to_string(q); }

Rat rat_of(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw Error("json: expected integer or \"p/q\" string");
}

}  // namespace

Matroid matroid_from_json_text(const std::string& text) {
  json j = json::parse(text);
  std::string type = j.at("type").get<std::string>();
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels"))
    labels.push_back(l.is_string() ? l.get<std::string>()
                                   : std::to_string(l.get<long long>()));
  if (type == "matrix") {
    RatMat columns;
    for (const auto& col : j.at("columns")) {
      RatVec v;
      for (const auto& entry : col) v.push_back(rat_of(entry));
      columns.push_back(std::move(v));
    }
    return Matroid::from_rational_matrix(columns, std::move(labels));
  }
  if (type == "circuits") {
    std::vector<std::vector<std::string>> circuits;
    for (const auto& c : j.at("circuits")) {
      std::vector<std::string> circuit;
      for (const auto& l : c)
        circuit.push_back(l.is_string() ? l.get<std::string>()
                                        : std::to_string(l.get<long long>()));
      circuits.push_back(std::move(circuit));
    }
    return Matroid::from_circuits(std::move(labels), circuits);
  }
  throw Error("json: unknown matroid type " + type);
}

std::string matroid_to_json_text(const Matroid& m) {
  json j;
  if (m.has_matrix()) {
    j["type"] = "matrix";
    j["labels"] = m.labels();
    json cols = json::array();
    for (const RatVec& c : m.matrix()) {
      json col = json::array();
      for (const Rat& q : c) col.push_back(rat_json(q));
      cols.push_back(col);
    }
    j["columns"] = cols;
  } else {
    j["type"] = "circuits";
    j["labels"] = m.labels();
    json cs = json::array();
    for (Mask c : m.circuits()) {
      json circuit = json::array();
      for (int e : bits_of(c)) circuit.push_back(m.label(e));
      cs.push_back(circuit);
    }
    j["circuits"] = cs;
  }
  return j.dump(2) + "\n";
}

SimpleGraph graph_from_json_text(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> nodes;
  for (const auto& n : j.at("nodes"))
    nodes.push_back(n.is_string() ? n.get<std::string>()
                                  : std::to_string(n.get<long long>()));
  auto index = [&](const json& v) {
    std::string name = v.is_string() ? v.get<std::string>()
                                     : std::to_string(v.get<long long>());
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == name) return static_cast<int>(i);
    throw Error("json: unknown node " + name);
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(index(e.at(0)), index(e.at(1)));
  return SimpleGraph::make(std::move(nodes), std::move(edges));
}

std::string graph_to_json_text(const SimpleGraph& g) {
  json j;
  j["nodes"] = g.nodes;
  json edges = json::array();
  for (auto [a, b] : g.edges)
    edges.push_back(json::array({g.nodes[static_cast<size_t>(a)],
                                 g.nodes[static_cast<size_t>(b)]}));
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

CoxeterDiagram diagram_from_json_text(const std::string& text) {
  json j = json::parse(text);
  CoxeterDiagram d;
  d.type = "custom";
  for (const auto& n : j.at("nodes"))
    d.nodes.push_back(n.is_string() ? n.get<std::string>()
                                    : std::to_string(n.get<long long>()));
  auto index = [&](const json& v) {
    std::string name = v.is_string() ? v.get<std::string>()
                                     : std::to_string(v.get<long long>());
    for (size_t i = 0; i < d.nodes.size(); ++i)
      if (d.nodes[i] == name) return static_cast<int>(i);
    throw Error("json: unknown node " + name);
  };
  for (const auto& e : j.at("edges")) {
    int m = e.size() > 2 ? e.at(2).get<int>() : 3;
    if (m != 3 && m != 4 && m != 6)
      throw Error("json: edge label must be 3, 4 or 6");
    d.edges.push_back({index(e.at(0)), index(e.at(1)), m});
  }
  return d;
}

std::string poset_to_json_text(const FinitePoset& p) {
  json j;
  j["elements"] = p.elements();
  json covers = json::array();
  for (auto [a, b] : p.covers())
    covers.push_back(json::array({p.element(a), p.element(b)}));
  j["covers"] = covers;
  return j.dump(2) + "\n";
}

std::string poset_to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.element(i)
       << "\\nrk=" << p.height(i) << "\"];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string complex_to_json_text(const SimplicialComplex& k) {
  json j;
  j["vertices"] = k.vertices();
  json facets = json::array();
  for (const auto& facet : k.facets()) {
    json f = json::array();
    for (int v : facet) f.push_back(k.vertices()[static_cast<size_t>(v)]);
    facets.push_back(f);
  }
  j["facets"] = facets;
  return j.dump(2) + "\n";
}

namespace {

json forest_json(const LabeledForest& forest,
                 const std::vector<std::string>& labels) {
  json nodes = json::array();
  for (Mask l : forest.labels) nodes.push_back(set_string(l, labels));
  json edges = json::array();
  for (size_t i = 0; i < forest.labels.size(); ++i)
    if (forest.parent[i] >= 0)
      edges.push_back(json::array(
          {set_string(forest.labels[static_cast<size_t>(forest.parent[i])],
                      labels),
           set_string(forest.labels[i], labels)}));
  json j;
  j["labels"] = nodes;
  j["edges"] = edges;  // parent -> child
  return j;
}

}  // namespace

std::string bergman_to_json_text(const Matroid& m,
                                 const SimplicialComplex& fine,
                                 const CoarseComplex& coarse) {
  json j;
  {
    json jf;
    jf["vertices"] = fine.vertices();
    json facets = json::array();
    for (const auto& facet : fine.facets()) {
      json f = json::array();
      for (int v : facet) f.push_back(fine.vertices()[static_cast<size_t>(v)]);
      facets.push_back(f);
    }
    jf["facets"] = facets;
    j["fine"] = jf;
  }
  {
    json cells = json::array();
    for (const CoarseCell& c : coarse.cells) {
      json jc;
      jc["id"] = c.id(coarse.ground_labels);
      json flags = json::array();
      for (const FlagOfFlats& f : c.flags) {
        json chain = json::array();
        for (Mask member : f.chain)
          chain.push_back(set_string(member, coarse.ground_labels));
        flags.push_back(chain);
      }
      jc["member_flags"] = flags;
      jc["forest"] =
          forest_json(forest_of_flag(m, c.representative()), m.labels());
      cells.push_back(jc);
    }
    json jc;
    jc["cells"] = cells;
    FinitePoset p = coarse.poset();
    json covers = json::array();
    for (auto [a, b] : p.covers())
      covers.push_back(json::array({p.element(a), p.element(b)}));
    jc["covers"] = covers;
    j["coarse"] = jc;
  }
  return j.dump(2) + "\n";
}

std::string forest_to_dot(const LabeledForest& forest,
                          const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph forest {\n";
  for (size_t i = 0; i < forest.labels.size(); ++i)
    os << "  n" << i << " [label=\"" << set_string(forest.labels[i], labels)
       << "\"];\n";
  for (size_t i = 0; i < forest.labels.size(); ++i)
    if (forest.parent[i] >= 0)
      os << "  n" << forest.parent[i] << " -> n" << i << ";\n";
  os << "}\n";
  return os.str();
}

std::string forest_to_json_text(const LabeledForest& forest,
                                const std::vector<std::string>& labels) {
  return forest_json(forest, labels).dump(2) + "\n";
}

std::string extension_to_json_text(const AffineExtension& ext) {
  json j;
  j["base"] = json::parse(matroid_to_json_text(ext.base().underlying()));
  json g = json::array();
  for (const Rat& q : ext.g_column()) g.push_back(rat_json(q));
  j["g"] = g;
  j["seed"] = ext.seed();
  json certified = json::array();
  for (Mask f : ext.certified_flats())
    certified.push_back(set_string(f, ext.base().underlying().labels()));
  j["certified_flats"] = certified;
  return j.dump(2) + "\n";
}

}  // namespace bkit
