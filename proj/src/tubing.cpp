#include "bkit/tubing.hpp"

#include <algorithm>
#include <functional>

namespace bkit {

SimpleGraph SimpleGraph::make(std::vector<std::string> nodes,
                              std::vector<std::pair<int, int>> edges) {
  SimpleGraph g;
  g.nodes = std::move(nodes);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw Error("graph: self-loop");
    if (a < 0 || b < 0 || a >= g.n() || b >= g.n())
      throw Error("graph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw Error("graph: multi-edge");
    g.edges.emplace_back(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool SimpleGraph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool SimpleGraph::connected(Mask subset) const {
  if (subset == 0) return false;
  int start = bits_of(subset)[0];
  Mask visited = Mask(1) << start;
  std::vector<int> stack = {start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : bits_of(subset & ~visited))
      if (adjacent(v, w)) {
        visited |= Mask(1) << w;
        stack.push_back(w);
      }
  }
  return visited == subset;
}

bool is_tube(const SimpleGraph& g, Mask t) {
  return t != 0 && t != full_mask(g.n()) && g.connected(t);
}

std::vector<Mask> tubes(const SimpleGraph& g) {
  std::vector<Mask> out;
  for (Mask t = 1; t < full_mask(g.n()); ++t)
    if (is_tube(g, t)) out.push_back(t);
  return out;
}

bool are_compatible(const SimpleGraph& g, Mask t1, Mask t2,
                    bool literal_adjacency) {
  if (!is_tube(g, t1) || !is_tube(g, t2)) throw Error("not a tube");
  if ((t1 & t2) == t1 || (t1 & t2) == t2) return t1 != t2;  // nested
  if (t1 & t2) return false;                                // intersecting
  Mask u = t1 | t2;
  bool adjacent = literal_adjacency ? is_tube(g, u) : g.connected(u);
  return !adjacent;
}

std::vector<Tubing> all_tubings(const SimpleGraph& g, bool literal_adjacency) {
  std::vector<Mask> ts = tubes(g);
  if (ts.size() > 20) throw Error("tubings: guard exceeded (<= 20 tubes)");
  size_t k = ts.size();
  std::vector<std::vector<char>> compat(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      compat[i][j] = compat[j][i] =
          are_compatible(g, ts[i], ts[j], literal_adjacency) ? 1 : 0;
  std::vector<Tubing> out;
  Tubing current;
  std::vector<size_t> chosen;
  std::function<void(size_t)> dfs = [&](size_t start) {
    out.push_back(current);
    for (size_t i = start; i < k; ++i) {
      bool ok = true;
      for (size_t j : chosen)
        if (!compat[j][i]) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(i);
      current.insert(ts[i]);
      dfs(i + 1);
      current.erase(ts[i]);
      chosen.pop_back();
    }
  };
  dfs(0);
  return out;
}

std::string tubing_string(const SimpleGraph& g, const Tubing& t) {
  std::string s = "{";
  bool first = true;
  for (Mask tube : t) {
    if (!first) s += ",";
    s += set_string(tube, g.nodes);
    first = false;
  }
  s += "}";
  return s;
}

FinitePoset face_poset(const SimpleGraph& g, bool literal_adjacency) {
  std::vector<Tubing> ts = all_tubings(g, literal_adjacency);
  std::vector<std::string> ids;
  for (const Tubing& t : ts) ids.push_back(tubing_string(g, t));
  size_t k = ts.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      leq[i][j] = std::includes(ts[i].begin(), ts[i].end(), ts[j].begin(),
                                ts[j].end())
                      ? 1
                      : 0;
  return FinitePoset::from_leq_matrix(std::move(ids), std::move(leq));
}

std::vector<long long> f_vector(const SimpleGraph& g, bool literal_adjacency) {
  std::vector<long long> f(static_cast<size_t>(g.n()), 0);
  for (const Tubing& t : all_tubings(g, literal_adjacency)) {
    size_t d = static_cast<size_t>(g.n()) - 1 - t.size();
    if (d >= f.size()) throw Error("tubing larger than expected");
    ++f[d];
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace bkit
