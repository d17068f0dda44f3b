#include "bkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bkit {

namespace {

constexpr int kRankGuard = 6;

Rat dot(const RatVec& a, const RatVec& b) {
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec reflect(const RatVec& v, const RatVec& alpha) {
  Rat c = Rat(2) * dot(v, alpha) / dot(alpha, alpha);
  RatVec out = v;
  for (size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

// Canonical comparator on coordinate vectors; see header.
bool root_less(const RatVec& a, const RatVec& b) {
  size_t fa = 0, fb = 0;
  while (fa < a.size() && a[fa] == 0) ++fa;
  while (fb < b.size() && b[fb] == 0) ++fb;
  if (fa != fb) return fa < fb;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

int m_from_roots(const RatVec& a, const RatVec& b) {
  // 4 cos^2(theta) in {0,1,2,3} corresponds to m in {2,3,4,6}.
  Rat num = dot(a, b) * dot(a, b) * 4;
  Rat den = dot(a, a) * dot(b, b);
  Rat q = num / den;
  if (q == 0) return 2;
  if (q == 1) return 3;
  if (q == 2) return 4;
  if (q == 3) return 6;
  throw Error("coxeter: non-crystallographic angle");
}

}  // namespace

int CoxeterDiagram::edge_label(int a, int b) const {
  for (const auto& e : edges)
    if ((e[0] == a && e[1] == b) || (e[0] == b && e[1] == a)) return e[2];
  return 2;
}

CoxeterDiagram diagram_of_type(const std::string& type) {
  return build_root_system(type).diagram;
}

namespace {

std::vector<RatVec> simple_roots_of_type(char family, int n) {
  auto e = [&](int i, int dim) {
    RatVec v(static_cast<size_t>(dim), Rat(0));
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  auto diff = [&](int i, int j, int dim) {
    RatVec v(static_cast<size_t>(dim), Rat(0));
    v[static_cast<size_t>(i)] = 1;
    v[static_cast<size_t>(j)] = -1;
    return v;
  };
  std::vector<RatVec> out;
  switch (family) {
    case 'A': {
      if (n < 1) throw Error("unsupported type");
      for (int i = 0; i < n; ++i) out.push_back(diff(i, i + 1, n + 1));
      break;
    }
    case 'B': {
      if (n < 2) throw Error("unsupported type");
      for (int i = 0; i + 1 < n; ++i) out.push_back(diff(i, i + 1, n));
      out.push_back(e(n - 1, n));
      break;
    }
    case 'C': {
      if (n < 2) throw Error("unsupported type");
      for (int i = 0; i + 1 < n; ++i) out.push_back(diff(i, i + 1, n));
      RatVec last = e(n - 1, n);
      last[static_cast<size_t>(n - 1)] = 2;
      out.push_back(last);
      break;
    }
    case 'D': {
      if (n < 3) throw Error("unsupported type");
      for (int i = 0; i + 1 < n; ++i) out.push_back(diff(i, i + 1, n));
      RatVec last(static_cast<size_t>(n), Rat(0));
      last[static_cast<size_t>(n - 2)] = 1;
      last[static_cast<size_t>(n - 1)] = 1;
      out.push_back(last);
      break;
    }
    default:
      throw Error("unsupported type");
  }
  return out;
}

}  // namespace

RootSystem build_root_system(const std::string& type) {
  if (type.size() < 2) throw Error("unsupported type");
  char family = type[0];
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (...) {
    throw Error("unsupported type");
  }
  if (n > kRankGuard) throw Error("unsupported type: rank guard exceeded");
  std::vector<RatVec> simples = simple_roots_of_type(family, n);

  CoxeterDiagram diagram;
  diagram.type = type;
  for (int i = 0; i < n; ++i) diagram.nodes.push_back("s" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = m_from_roots(simples[static_cast<size_t>(i)],
                           simples[static_cast<size_t>(j)]);
      if (m >= 3) diagram.edges.push_back({i, j, m});
    }

  RootSystem rs;
  rs.diagram = diagram;
  rs.simple_roots = simples;

  // Orbit of the simple roots under the simple reflections.
  std::set<std::vector<std::string>> seen;  // exact string form
  auto key = [](const RatVec& v) {
    std::vector<std::string> k;
    for (const Rat& q : v) k.push_back(q.get_str());
    return k;
  };
  std::vector<RatVec> all = simples;
  for (const RatVec& r : all) seen.insert(key(r));
  std::vector<RatVec> frontier = all;
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& r : frontier)
      for (const RatVec& s : simples) {
        RatVec image = reflect(r, s);
        if (seen.insert(key(image)).second) {
          all.push_back(image);
          next.push_back(image);
        }
      }
    frontier = std::move(next);
  }

  // Keep the positive half: nonnegative exact coefficients on the simples.
  std::vector<const RatVec*> basis;
  for (const RatVec& s : simples) basis.push_back(&s);
  std::vector<std::pair<RatVec, RatVec>> positives;  // (root, coefficients)
  for (const RatVec& r : all) {
    auto coeffs = in_span(basis, r);
    if (!coeffs) throw Error("coxeter: root outside simple-root span");
    bool nonneg = true;
    for (const Rat& c : *coeffs)
      if (c < 0) { nonneg = false; break; }
    if (nonneg) positives.emplace_back(r, *coeffs);
  }
  std::sort(positives.begin(), positives.end(),
            [](const auto& a, const auto& b) { return root_less(a.first, b.first); });
  for (size_t i = 0; i < positives.size(); ++i) {
    rs.positive_roots.push_back(positives[i].first);
    rs.simple_coefficients.push_back(positives[i].second);
    rs.labels.push_back(std::to_string(i + 1));
  }
  rs.simple_position.assign(static_cast<size_t>(n), -1);
  for (size_t s = 0; s < simples.size(); ++s)
    for (size_t i = 0; i < rs.positive_roots.size(); ++i)
      if (rs.positive_roots[i] == simples[s]) {
        rs.simple_position[s] = static_cast<int>(i);
        break;
      }
  for (int p : rs.simple_position)
    if (p < 0) throw Error("coxeter: simple root missing from positives");
  return rs;
}

RootSystem build_root_system(const CoxeterDiagram& diagram) {
  if (diagram.type.empty() || diagram.type == "custom")
    throw Error("unsupported type: custom diagrams generate no root system");
  return build_root_system(diagram.type);
}

Mask RootSystem::support(int root_index) const {
  if (root_index < 0 || root_index >= count()) throw Error("unknown label");
  Mask m = 0;
  const RatVec& c = simple_coefficients[static_cast<size_t>(root_index)];
  for (size_t s = 0; s < c.size(); ++s)
    if (c[s] != 0) m |= Mask(1) << s;
  return m;
}

Mask RootSystem::support(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return support(static_cast<int>(i));
  throw Error("unknown label");
}

OrientedMatroid coxeter_oriented_matroid(const RootSystem& rs) {
  RatMat cols = rs.positive_roots;
  return OrientedMatroid::from_columns(cols, rs.labels, 0);
}

std::vector<Perm> weyl_generators(const RootSystem& rs) {
  std::vector<Perm> gens;
  for (int s = 0; s < rs.rank(); ++s) {
    const RatVec& alpha = rs.simple_roots[static_cast<size_t>(s)];
    Perm p(static_cast<size_t>(rs.count()));
    for (int i = 0; i < rs.count(); ++i) {
      if (i == rs.simple_position[static_cast<size_t>(s)]) {
        p[static_cast<size_t>(i)] = i;  // s(alpha_s) = -alpha_s, same line
        continue;
      }
      RatVec image = reflect(rs.positive_roots[static_cast<size_t>(i)], alpha);
      int target = -1;
      for (int j = 0; j < rs.count(); ++j)
        if (rs.positive_roots[static_cast<size_t>(j)] == image) {
          target = j;
          break;
        }
      if (target < 0) throw Error("coxeter: reflection left the positive half");
      p[static_cast<size_t>(i)] = target;
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace bkit
