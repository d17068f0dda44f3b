#include "bkit/nested.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bkit {

namespace {

// Interval [0, y] decomposes as [0, a] x [0, b] iff a, b are complements
// in the interval and z -> (z meet a, z meet b) is an order isomorphism
// onto the product.
bool interval_decomposes(const FinitePoset& l, int bottom, int y) {
  std::vector<int> interval;
  for (int z = 0; z < l.size(); ++z)
    if (l.leq(bottom, z) && l.leq(z, y)) interval.push_back(z);
  size_t isize = interval.size();
  for (int a : interval) {
    if (a == bottom || a == y) continue;
    for (int b : interval) {
      if (b == bottom || b == y || b == a) continue;
      if (l.meet(a, b) != bottom || l.join(a, b) != y) continue;
      size_t below_a = 0, below_b = 0;
      for (int z : interval) {
        if (l.leq(z, a)) ++below_a;
        if (l.leq(z, b)) ++below_b;
      }
      if (below_a * below_b != isize) continue;
      // The pair map must be injective and both ways order-compatible.
      bool iso = true;
      std::map<std::pair<int, int>, int> seen;
      for (int z : interval) {
        int za = l.meet(z, a), zb = l.meet(z, b);
        if (za < 0 || zb < 0 || l.join(za, zb) != z) { iso = false; break; }
        if (!seen.emplace(std::make_pair(za, zb), z).second) {
          iso = false;
          break;
        }
      }
      if (!iso) continue;
      for (int z1 : interval) {
        for (int z2 : interval) {
          bool coord = l.leq(l.meet(z1, a), l.meet(z2, a)) &&
                       l.leq(l.meet(z1, b), l.meet(z2, b));
          if (coord != l.leq(z1, z2)) { iso = false; break; }
        }
        if (!iso) break;
      }
      if (iso) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> irreducibles(const FinitePoset& lattice) {
  if (!lattice.is_lattice()) throw Error("not a lattice");
  auto bottom = lattice.bottom();
  if (!bottom) throw Error("not a lattice");
  std::vector<int> out;
  for (int y = 0; y < lattice.size(); ++y) {
    if (y == *bottom) continue;
    if (!interval_decomposes(lattice, *bottom, y)) out.push_back(y);
  }
  return out;
}

bool is_nested(const FinitePoset& lattice, const std::vector<int>& irr,
               const std::vector<int>& subset) {
  std::set<int> irrset(irr.begin(), irr.end());
  for (int x : subset)
    if (!irrset.count(x)) return false;
  size_t k = subset.size();
  for (Mask pick = 0; pick < (Mask(1) << k); ++pick) {
    if (popcount(pick) < 2) continue;
    std::vector<int> chosen;
    for (int b : bits_of(pick)) chosen.push_back(subset[static_cast<size_t>(b)]);
    bool antichain = true;
    for (size_t i = 0; i < chosen.size() && antichain; ++i)
      for (size_t j = 0; j < chosen.size() && antichain; ++j)
        if (i != j && lattice.leq(chosen[i], chosen[j])) antichain = false;
    if (!antichain) continue;
    int join = chosen[0];
    for (size_t i = 1; i < chosen.size(); ++i)
      join = lattice.join(join, chosen[static_cast<size_t>(i)]);
    if (join < 0) throw Error("not a lattice");
    if (irrset.count(join)) return false;
  }
  return true;
}

std::vector<std::vector<int>> nested_sets(const FinitePoset& lattice) {
  if (lattice.size() > 4096) throw Error("nested_sets: guard exceeded");
  std::vector<int> irr = irreducibles(lattice);
  std::set<int> irrset(irr.begin(), irr.end());
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // DFS; adding x keeps the set nested iff every antichain through x has a
  // reducible join.
  std::function<void(size_t)> dfs = [&](size_t start) {
    out.push_back(current);
    for (size_t i = start; i < irr.size(); ++i) {
      int x = irr[i];
      std::vector<int> incomparable;
      for (int y : current)
        if (!lattice.leq(x, y) && !lattice.leq(y, x)) incomparable.push_back(y);
      bool ok = true;
      size_t k = incomparable.size();
      for (Mask pick = 1; pick < (Mask(1) << k) && ok; ++pick) {
        std::vector<int> chosen = {x};
        for (int b : bits_of(pick))
          chosen.push_back(incomparable[static_cast<size_t>(b)]);
        bool antichain = true;
        for (size_t a = 1; a < chosen.size() && antichain; ++a)
          for (size_t b2 = 1; b2 < chosen.size() && antichain; ++b2)
            if (a != b2 && lattice.leq(chosen[a], chosen[b2]))
              antichain = false;
        if (!antichain) continue;
        int join = chosen[0];
        for (size_t a = 1; a < chosen.size(); ++a)
          join = lattice.join(join, chosen[a]);
        if (join < 0) throw Error("not a lattice");
        if (irrset.count(join)) ok = false;
      }
      if (!ok) continue;
      current.push_back(x);
      dfs(i + 1);
      current.pop_back();
    }
  };
  dfs(0);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex nested_complex(const FinitePoset& lattice) {
  std::vector<int> irr = irreducibles(lattice);
  std::vector<std::string> vertices;
  std::map<int, int> vertex_of;
  for (size_t i = 0; i < irr.size(); ++i) {
    vertex_of[irr[i]] = static_cast<int>(i);
    vertices.push_back(lattice.element(irr[i]));
  }
  std::vector<std::vector<int>> faces;
  for (const std::vector<int>& ns : nested_sets(lattice)) {
    if (ns.empty()) continue;
    std::vector<int> face;
    for (int x : ns) face.push_back(vertex_of.at(x));
    faces.push_back(std::move(face));
  }
  if (faces.empty()) return SimplicialComplex();
  return SimplicialComplex::from_faces(std::move(vertices), std::move(faces));
}

std::vector<Mask> connected_flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask f : m.flats()) {
    if (f == 0) continue;
    if (m.connected_components(f).size() == 1) out.push_back(f);
  }
  return out;
}

std::vector<std::set<Mask>> nested_sets_of_matroid(const Matroid& m) {
  // Fast path over connected flats; the lattice-theoretic test is kept as
  // the oracle in the test suite.
  std::vector<Mask> irr = connected_flats(m);
  const std::vector<Mask>& flats = m.flats();
  std::set<Mask> irrset(irr.begin(), irr.end());
  auto join = [&](Mask a, Mask b) { return m.closure(a | b); };
  std::vector<std::set<Mask>> out;
  std::vector<Mask> current;
  std::function<void(size_t)> dfs = [&](size_t start) {
    out.emplace_back(current.begin(), current.end());
    for (size_t i = start; i < irr.size(); ++i) {
      Mask x = irr[i];
      std::vector<Mask> incomparable;
      for (Mask y : current)
        if ((x & y) != x && (x & y) != y) incomparable.push_back(y);
      bool ok = true;
      size_t k = incomparable.size();
      for (Mask pick = 1; pick < (Mask(1) << k) && ok; ++pick) {
        bool antichain = true;
        std::vector<Mask> chosen = {x};
        for (int b : bits_of(pick))
          chosen.push_back(incomparable[static_cast<size_t>(b)]);
        for (size_t a = 1; a < chosen.size() && antichain; ++a)
          for (size_t b2 = 1; b2 < chosen.size() && antichain; ++b2)
            if (a != b2 && (chosen[a] & chosen[b2]) == chosen[a])
              antichain = false;
        if (!antichain) continue;
        Mask j = chosen[0];
        for (size_t a = 1; a < chosen.size(); ++a) j = join(j, chosen[a]);
        if (irrset.count(j)) ok = false;
      }
      if (!ok) continue;
      current.push_back(x);
      dfs(i + 1);
      current.pop_back();
    }
  };
  (void)flats;
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_nested_flats(const Matroid& m, const std::vector<Mask>& flats) {
  for (Mask f : flats)
    if (!m.is_flat(f) || m.connected_components(f).size() != 1) return false;
  size_t k = flats.size();
  if (k > 20) throw Error("is_nested_flats: too many members");
  for (Mask pick = 0; pick < (Mask(1) << k); ++pick) {
    if (popcount(pick) < 2) continue;
    std::vector<Mask> chosen;
    for (int b : bits_of(pick)) chosen.push_back(flats[static_cast<size_t>(b)]);
    bool antichain = true;
    for (size_t i = 0; i < chosen.size() && antichain; ++i)
      for (size_t j = 0; j < chosen.size() && antichain; ++j)
        if (i != j && (chosen[i] & chosen[j]) == chosen[i]) antichain = false;
    if (!antichain) continue;
    Mask join = 0;
    for (Mask c : chosen) join |= c;
    join = m.closure(join);
    if (m.connected_components(join).size() == 1) return false;
  }
  return true;
}

std::vector<std::set<Mask>> forest_label_sets(const Matroid& m) {
  std::set<std::set<Mask>> out;
  for (const FlagOfFlats& f : all_flags(m))
    out.insert(forest_of_flag(m, f).label_set());
  return {out.begin(), out.end()};
}

std::vector<std::set<Mask>> positive_forest_label_sets(
    const OrientedMatroid& om) {
  std::set<std::set<Mask>> out;
  const Matroid& m = om.underlying();
  for (const FlagOfFlats& f : flags_within(m, om.positive_flats()))
    out.insert(forest_of_flag(m, f).label_set());
  return {out.begin(), out.end()};
}

}  // namespace bkit
