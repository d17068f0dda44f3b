#include "bkit/bergman.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bkit {

bool FlagOfFlats::subchain_of(const FlagOfFlats& o) const {
  return std::includes(o.chain.begin(), o.chain.end(), chain.begin(),
                       chain.end());
}

FlagOfFlats flag_of_weight(const std::vector<Rat>& weights) {
  std::vector<Rat> distinct = weights;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  FlagOfFlats f;
  Mask acc = 0;
  for (size_t lv = 0; lv + 1 < distinct.size(); ++lv) {
    for (size_t e = 0; e < weights.size(); ++e)
      if (weights[e] == distinct[lv]) acc |= Mask(1) << e;
    f.chain.push_back(acc);
  }
  return f;
}

namespace {

void check_chain(const std::vector<Mask>& chain, Mask ground) {
  Mask prev = 0;
  for (Mask f : chain) {
    if (f == 0 || f == ground || (f & ~ground))
      throw Error("flag: members must be proper nonempty subsets");
    if ((prev & f) != prev || prev == f)
      throw Error("flag: chain must strictly increase");
    prev = f;
  }
}

}  // namespace

bool is_valid_flag(const Matroid& m, const std::vector<Mask>& chain) {
  check_chain(chain, m.ground());
  for (Mask f : chain)
    if (!m.is_flat(f)) return false;
  return true;
}

Mask chain_matroid_loops(const Matroid& m, const std::vector<Mask>& chain) {
  check_chain(chain, m.ground());
  Mask loops = 0;
  Mask prev = 0;
  std::vector<Mask> blocks_prev;
  std::vector<Mask> members = chain;
  members.push_back(m.ground());
  for (Mask f : members) {
    int rp = m.rank(prev);
    for (int e : bits_of(f & ~prev))
      if (m.rank(prev | (Mask(1) << e)) == rp) loops |= Mask(1) << e;
    prev = f;
  }
  return loops;
}

Matroid matroid_of_flag(const Matroid& m, const FlagOfFlats& flag) {
  if (!is_valid_flag(m, flag.chain)) throw Error("invalid flag");
  std::vector<Mask> members = flag.chain;
  members.push_back(m.ground());
  Matroid base = m;
  auto rank = [base, members](Mask s) {
    int acc = 0;
    Mask prev = 0;
    for (Mask f : members) {
      Mask inside = s & (f & ~prev);
      acc += base.rank(inside | prev) - base.rank(prev);
      prev = f;
    }
    return acc;
  };
  return Matroid::from_rank_function(m.labels(), rank);
}

OrientedMatroid oriented_matroid_of_flag(const OrientedMatroid& om,
                                         const FlagOfFlats& flag) {
  const Matroid& m = om.underlying();
  if (!is_valid_flag(m, flag.chain)) throw Error("invalid flag");
  std::vector<Mask> members = flag.chain;
  members.push_back(m.ground());
  size_t d = om.signed_column(0).size();
  size_t blocks = members.size();
  RatMat out_cols(static_cast<size_t>(m.n()),
                  RatVec(blocks * d, Rat(0)));
  Mask prev = 0;
  for (size_t bi = 0; bi < blocks; ++bi) {
    Mask f = members[bi];
    // Echelon basis of the span of the previous member's columns.
    std::vector<RatVec> echelon;
    std::vector<size_t> pivots;
    auto reduce = [&](RatVec v) {
      for (size_t j = 0; j < echelon.size(); ++j)
        if (v[pivots[j]] != 0) {
          Rat fpiv = v[pivots[j]] / echelon[j][pivots[j]];
          for (size_t i = 0; i < d; ++i) v[i] -= fpiv * echelon[j][i];
        }
      return v;
    };
    for (int e : bits_of(prev)) {
      RatVec v = reduce(om.signed_column(e));
      size_t p = 0;
      while (p < d && v[p] == 0) ++p;
      if (p == d) continue;
      echelon.push_back(std::move(v));
      pivots.push_back(p);
    }
    for (int e : bits_of(f & ~prev)) {
      RatVec v = reduce(om.signed_column(e));
      for (size_t i = 0; i < d; ++i)
        out_cols[static_cast<size_t>(e)][bi * d + i] = v[i];
    }
    prev = f;
  }
  return OrientedMatroid::from_columns(out_cols, m.labels(), 0);
}

LabeledForest forest_of_flag(const Matroid& m, const FlagOfFlats& flag) {
  if (!is_valid_flag(m, flag.chain)) throw Error("invalid flag");
  std::vector<std::vector<Mask>> comps_at;  // per member, bottom to top
  std::vector<Mask> members = flag.chain;
  members.push_back(m.ground());
  for (Mask f : members) comps_at.push_back(m.connected_components(f));

  // Construction one: list every component of every member and order the
  // distinct labels by inclusion (parent = least proper superset).
  std::set<Mask> labelset;
  for (const auto& level : comps_at)
    for (Mask c : level) labelset.insert(c);
  std::vector<Mask> labels(labelset.begin(), labelset.end());
  std::sort(labels.begin(), labels.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  auto index_of = [&](Mask c) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == c) return static_cast<int>(i);
    return -1;
  };
  LabeledForest by_order;
  by_order.labels = labels;
  by_order.parent.assign(labels.size(), -1);
  for (size_t i = 0; i < labels.size(); ++i) {
    int best = -1;
    for (size_t j = 0; j < labels.size(); ++j) {
      if (i == j) continue;
      if ((labels[i] & labels[j]) != labels[i] || labels[i] == labels[j])
        continue;
      if (best < 0 ||
          popcount(labels[j]) < popcount(labels[static_cast<size_t>(best)]))
        best = static_cast<int>(j);
    }
    by_order.parent[i] = best;
  }

  // Construction two: recursive child expansion from the roots.
  LabeledForest recursive;
  recursive.labels = labels;
  recursive.parent.assign(labels.size(), -1);
  for (size_t level = 1; level < comps_at.size(); ++level) {
    for (Mask parent : comps_at[level]) {
      for (Mask child : comps_at[level - 1]) {
        if (child == parent || (child & parent) != child) continue;
        int ci = index_of(child);
        recursive.parent[static_cast<size_t>(ci)] = index_of(parent);
      }
    }
  }
  if (!(recursive == by_order))
    throw Error("forest constructions disagree");  // structural invariant
  return by_order;
}

std::vector<FlagOfFlats> flags_within(const Matroid& m,
                                      const std::vector<Mask>& allowed) {
  std::vector<Mask> proper;
  for (Mask f : allowed)
    if (f != 0 && f != m.ground()) proper.push_back(f);
  std::sort(proper.begin(), proper.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  std::vector<FlagOfFlats> out;
  std::vector<Mask> current;
  std::function<void(size_t)> dfs = [&](size_t start) {
    out.push_back(FlagOfFlats{current});
    for (size_t i = start; i < proper.size(); ++i) {
      Mask f = proper[i];
      if (!current.empty()) {
        Mask last = current.back();
        if ((last & f) != last || last == f) continue;
      }
      current.push_back(f);
      dfs(i + 1);
      current.pop_back();
    }
  };
  dfs(0);
  return out;
}

std::vector<FlagOfFlats> all_flags(const Matroid& m) {
  return flags_within(m, m.flats());
}

SimplicialComplex bergman_fine(const Matroid& m) {
  std::vector<Mask> proper;
  for (Mask f : m.flats())
    if (f != 0 && f != m.ground()) proper.push_back(f);
  std::vector<std::string> vertices;
  std::map<Mask, int> vertex_of;
  for (Mask f : proper) {
    vertex_of[f] = static_cast<int>(vertices.size());
    vertices.push_back(m.set_string(f));
  }
  std::vector<std::vector<int>> faces;
  for (const FlagOfFlats& f : all_flags(m)) {
    if (f.chain.empty()) continue;
    std::vector<int> face;
    for (Mask member : f.chain) face.push_back(vertex_of[member]);
    faces.push_back(std::move(face));
  }
  if (faces.empty()) return SimplicialComplex();
  return SimplicialComplex::from_faces(std::move(vertices), std::move(faces));
}

namespace {

// Rank table of the chain matroid over the full subset lattice, computed
// from a precomputed rank table of the base matroid.
std::vector<std::uint8_t> key_of_chain(const std::vector<std::uint8_t>& base,
                                       int n, const std::vector<Mask>& chain,
                                       Mask ground) {
  std::vector<Mask> members = chain;
  members.push_back(ground);
  size_t size = size_t(1) << n;
  std::vector<std::vector<std::uint8_t>> blockrank;
  std::vector<Mask> blockmask;
  Mask prev = 0;
  for (Mask f : members) {
    Mask block = f & ~prev;
    std::vector<std::uint8_t> t(size, 0);
    std::uint8_t rp = base[prev];
    Mask s = block;
    while (true) {
      t[s] = static_cast<std::uint8_t>(base[s | prev] - rp);
      if (s == 0) break;
      s = (s - 1) & block;
    }
    blockrank.push_back(std::move(t));
    blockmask.push_back(block);
    prev = f;
  }
  std::vector<std::uint8_t> key(size, 0);
  for (Mask s = 0; s < size; ++s) {
    int acc = 0;
    for (size_t i = 0; i < blockmask.size(); ++i)
      acc += blockrank[i][s & blockmask[i]];
    key[s] = static_cast<std::uint8_t>(acc);
  }
  return key;
}

CoarseComplex build_coarse(const Matroid& m,
                           const std::vector<FlagOfFlats>& flags,
                           bool parallel) {
  if (m.n() > 16) throw Error("coarse subdivision: guard exceeded");
  std::vector<std::uint8_t> base = m.rank_table();
  int n = m.n();
  Mask ground = m.ground();
  std::vector<std::vector<std::uint8_t>> keys(flags.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (size_t i = 0; i < flags.size(); ++i)
      keys[i] = key_of_chain(base, n, flags[i].chain, ground);
  } else {
    for (size_t i = 0; i < flags.size(); ++i)
      keys[i] = key_of_chain(base, n, flags[i].chain, ground);
  }

  std::map<std::vector<std::uint8_t>, std::vector<size_t>> groups;
  for (size_t i = 0; i < flags.size(); ++i) groups[keys[i]].push_back(i);

  CoarseComplex cc;
  cc.ground_labels = m.labels();
  for (auto& [key, idxs] : groups) {
    CoarseCell cell;
    cell.key = key;
    for (size_t i : idxs) {
      cell.flags.push_back(flags[i]);
      cell.dim = std::max(cell.dim, flags[i].length() - 1);
      cell.forests.insert(forest_of_flag(m, flags[i]).label_set());
    }
    std::sort(cell.flags.begin(), cell.flags.end());
    cc.cells.push_back(std::move(cell));
  }
  std::sort(cc.cells.begin(), cc.cells.end(),
            [](const CoarseCell& a, const CoarseCell& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.flags < b.flags;
            });

  // Subchain order: transitive closure of "some member flag of C is a
  // subchain of a member flag of C'".
  std::map<std::vector<Mask>, int> cell_of;
  for (size_t c = 0; c < cc.cells.size(); ++c)
    for (const FlagOfFlats& f : cc.cells[c].flags)
      cell_of[f.chain] = static_cast<int>(c);
  size_t k = cc.cells.size();
  std::vector<std::set<int>> above(k);
  for (size_t c = 0; c < k; ++c) {
    for (const FlagOfFlats& f : cc.cells[c].flags) {
      size_t len = f.chain.size();
      for (Mask sub = 0; sub < (Mask(1) << len); ++sub) {
        std::vector<Mask> subchain;
        for (int b : bits_of(sub))
          subchain.push_back(f.chain[static_cast<size_t>(b)]);
        auto it = cell_of.find(subchain);
        if (it == cell_of.end())
          throw Error("coarse order: flag family is not subchain-closed");
        above[static_cast<size_t>(it->second)].insert(static_cast<int>(c));
      }
    }
  }
  cc.leq.assign(k, std::vector<char>(k, 0));
  for (size_t c = 0; c < k; ++c) {
    // BFS through the direct subchain edges.
    std::vector<int> stack(above[c].begin(), above[c].end());
    std::vector<char>& row = cc.leq[c];
    row[c] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (row[static_cast<size_t>(x)]) continue;
      row[static_cast<size_t>(x)] = 1;
      for (int y : above[static_cast<size_t>(x)])
        if (!row[static_cast<size_t>(y)]) stack.push_back(y);
    }
  }
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      if (cc.leq[a][b] && cc.leq[b][a])
        throw Error("coarse order: antisymmetry violated");
  return cc;
}

}  // namespace

std::string CoarseCell::id(const std::vector<std::string>& labels) const {
  std::string s;
  for (const FlagOfFlats& f : flags) {
    if (!s.empty()) s += "|";
    if (f.chain.empty()) s += "()";
    for (size_t i = 0; i < f.chain.size(); ++i) {
      if (i) s += "<";
      s += set_string(f.chain[i], labels);
    }
  }
  return s;
}

void CoarseComplex::build_indices() const {
  if (!flag_index_.empty() || cells.empty()) return;
  for (size_t c = 0; c < cells.size(); ++c) {
    key_index_[cells[c].key] = static_cast<int>(c);
    for (const FlagOfFlats& f : cells[c].flags)
      flag_index_[f.chain] = static_cast<int>(c);
  }
}

int CoarseComplex::cell_of_flag(const FlagOfFlats& f) const {
  build_indices();
  auto it = flag_index_.find(f.chain);
  return it == flag_index_.end() ? -1 : it->second;
}

int CoarseComplex::cell_of_key(const std::vector<std::uint8_t>& key) const {
  build_indices();
  auto it = key_index_.find(key);
  return it == key_index_.end() ? -1 : it->second;
}

std::vector<long long> CoarseComplex::f_vector() const {
  std::vector<long long> f;
  for (const CoarseCell& c : cells) {
    if (c.dim < 0) continue;
    if (f.size() <= static_cast<size_t>(c.dim))
      f.resize(static_cast<size_t>(c.dim) + 1, 0);
    ++f[static_cast<size_t>(c.dim)];
  }
  return f;
}

long long CoarseComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (long long fd : f_vector()) {
    chi += sign * fd;
    sign = -sign;
  }
  return chi;
}

FinitePoset CoarseComplex::poset() const {
  std::vector<std::string> ids;
  for (const CoarseCell& c : cells) ids.push_back(c.id(ground_labels));
  return FinitePoset::from_leq_matrix(ids, leq);
}

CoarseComplex bergman_coarse(const Matroid& m) {
  return build_coarse(m, all_flags(m), true);
}

CoarseComplex bergman_coarse_serial(const Matroid& m) {
  return build_coarse(m, all_flags(m), false);
}

PositiveBergman positive_bergman(const OrientedMatroid& om) {
  if (!om.is_acyclic()) throw Error("not acyclic");
  const Matroid& m = om.underlying();
  PositiveBergman pb;
  pb.positive_flats = om.positive_flats();

  std::vector<Mask> proper;
  for (Mask f : pb.positive_flats)
    if (f != 0 && f != m.ground()) proper.push_back(f);
  std::vector<std::string> vertices;
  std::map<Mask, int> vertex_of;
  std::sort(proper.begin(), proper.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  for (Mask f : proper) {
    vertex_of[f] = static_cast<int>(vertices.size());
    vertices.push_back(m.set_string(f));
  }
  std::vector<FlagOfFlats> flags = flags_within(m, pb.positive_flats);
  std::vector<std::vector<int>> faces;
  for (const FlagOfFlats& f : flags) {
    if (f.chain.empty()) continue;
    std::vector<int> face;
    for (Mask member : f.chain) face.push_back(vertex_of[member]);
    faces.push_back(std::move(face));
  }
  if (!faces.empty())
    pb.fine =
        SimplicialComplex::from_faces(std::move(vertices), std::move(faces));
  pb.coarse = build_coarse(m, flags, true);
  return pb;
}

std::set<Mask> psi(const Matroid& m, const std::vector<int>& simple_positions,
                   const std::vector<Mask>& positive_flats,
                   const FlagOfFlats& flag) {
  std::set<Mask> allowed(positive_flats.begin(), positive_flats.end());
  std::set<Mask> tubes;
  for (Mask f : flag.chain) {
    if (!allowed.count(f)) throw Error("psi: non-positive member");
    for (Mask comp : m.connected_components(f)) {
      Mask tube = 0;
      for (size_t s = 0; s < simple_positions.size(); ++s)
        if (comp & (Mask(1) << simple_positions[s])) tube |= Mask(1) << s;
      if (tube != 0 &&
          tube != full_mask(static_cast<int>(simple_positions.size())))
        tubes.insert(tube);
    }
  }
  return tubes;
}

namespace {

CoverReport covers_impl(const OrientedMatroid& om,
                        const std::vector<SignVector>& topes, bool parallel) {
  const Matroid& m = om.underlying();
  // Flats positive with respect to each tope = zero sets of its faces.
  std::vector<std::vector<Mask>> tope_flats;
  for (const SignVector& t : topes) {
    std::vector<Mask> pf = om.positive_flats_wrt(t);
    std::sort(pf.begin(), pf.end());
    tope_flats.push_back(std::move(pf));
  }
  std::vector<FlagOfFlats> flags = all_flags(m);
  std::vector<char> uncovered(flags.size(), 0);
  auto check = [&](size_t i) {
    const FlagOfFlats& f = flags[i];
    for (const auto& pf : tope_flats) {
      bool all = true;
      for (Mask member : f.chain)
        if (!std::binary_search(pf.begin(), pf.end(), member)) {
          all = false;
          break;
        }
      if (all) return;
    }
    uncovered[i] = 1;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (size_t i = 0; i < flags.size(); ++i) check(i);
  } else {
    for (size_t i = 0; i < flags.size(); ++i) check(i);
  }
  CoverReport rep;
  rep.covered = true;
  for (size_t i = 0; i < flags.size(); ++i)
    if (uncovered[i]) {
      rep.covered = false;
      rep.witness = flags[i];
      break;
    }
  return rep;
}

}  // namespace

CoverReport covers(const OrientedMatroid& om,
                   const std::vector<SignVector>& topes) {
  return covers_impl(om, topes, true);
}

CoverReport covers_serial(const OrientedMatroid& om,
                          const std::vector<SignVector>& topes) {
  return covers_impl(om, topes, false);
}

bool is_matroid_automorphism(const Matroid& m, const Perm& p) {
  if (static_cast<int>(p.size()) != m.n()) return false;
  {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
      if (v < 0 || v >= m.n() || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  // A bijection preserving the set of flats together with their ranks
  // preserves the whole rank function.
  std::set<Mask> flats(m.flats().begin(), m.flats().end());
  for (Mask f : flats) {
    Mask image = 0;
    for (int e : bits_of(f)) image |= Mask(1) << p[static_cast<size_t>(e)];
    if (!flats.count(image) || m.rank(image) != m.rank(f)) return false;
  }
  return true;
}

std::vector<Perm> generate_group(const std::vector<Perm>& gens, size_t guard) {
  if (gens.empty()) return {};
  size_t n = gens[0].size();
  Perm identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Perm> seen = {identity};
  std::vector<Perm> frontier = {identity};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q(n);
        for (size_t i = 0; i < n; ++i)
          q[i] = g[static_cast<size_t>(p[i])];
        if (seen.insert(q).second) next.push_back(q);
        if (seen.size() > guard) throw Error("group generation guard hit");
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

TevelevReport tevelev_check(const OrientedMatroid& om,
                            const std::vector<Perm>& group_perms) {
  const Matroid& m = om.underlying();
  TevelevReport rep;
  for (const Perm& p : group_perms)
    if (!is_matroid_automorphism(m, p))
      throw Error("tevelev: input permutation is not a matroid automorphism");
  std::vector<Perm> group = generate_group(group_perms);
  rep.group_order = group.size();

  CoarseComplex full = bergman_coarse(m);
  PositiveBergman pos = positive_bergman(om);
  std::set<std::vector<std::uint8_t>> positive_keys;
  for (const CoarseCell& c : pos.coarse.cells) positive_keys.insert(c.key);
  rep.cell_count = static_cast<size_t>(full.size());
  rep.positive_cell_count = positive_keys.size();

  auto apply = [&](const Perm& p, const FlagOfFlats& f) {
    FlagOfFlats out;
    for (Mask member : f.chain) {
      Mask image = 0;
      for (int e : bits_of(member))
        image |= Mask(1) << p[static_cast<size_t>(e)];
      out.chain.push_back(image);
    }
    return out;
  };

  // Each input permutation must map coarse cells to coarse cells.
  for (const Perm& p : group_perms)
    for (const CoarseCell& cell : full.cells) {
      int target = -1;
      for (const FlagOfFlats& f : cell.flags) {
        int t = full.cell_of_flag(apply(p, f));
        if (t < 0) throw Error("tevelev: image flag missing");
        if (target < 0) target = t;
        if (t != target)
          throw Error("tevelev: permutation is not cellular");
      }
    }

  rep.ok = true;
  for (const CoarseCell& cell : full.cells) {
    bool found = false;
    for (const Perm& w : group) {
      int t = full.cell_of_flag(apply(w, cell.representative()));
      if (t >= 0 && positive_keys.count(full.cells[static_cast<size_t>(t)].key)) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.ok = false;
      rep.witness = cell.id(full.ground_labels);
      break;
    }
  }
  return rep;
}

}  // namespace bkit
