#include "bkit/matroid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace bkit {

namespace {

constexpr int kFlatEnumGuard = 20;
constexpr int kCircuitGuard = 10;

struct RankOracle {
  virtual ~RankOracle() = default;
  virtual int rank(Mask s) const = 0;
};

struct MatrixOracle final : RankOracle {
  RatMat columns;
  int rank(Mask s) const override {
    std::vector<const RatVec*> cols;
    for (int b : bits_of(s)) cols.push_back(&columns[static_cast<size_t>(b)]);
    return rat_rank(cols);
  }
};

struct CircuitOracle final : RankOracle {
  int n = 0;
  std::vector<Mask> circuits;
  // rank[mask] precomputed: independent iff no circuit inside.
  std::vector<std::uint8_t> table;

  void build() {
    size_t size = size_t(1) << n;
    Mask full = static_cast<Mask>(size - 1);
    std::vector<std::uint8_t> indep(size, 1);
    for (Mask c : circuits) {
      Mask s = c;
      while (true) {
        indep[s] = 0;
        if (s == full) break;
        s = (s + 1) | c;  // next superset of c
      }
    }
    table.assign(size, 0);
    for (Mask s = 1; s < size; ++s) {
      if (indep[s]) {
        table[s] = static_cast<std::uint8_t>(popcount(s));
      } else {
        int best = 0;
        for (int b : bits_of(s))
          best = std::max(best, static_cast<int>(table[s & ~(Mask(1) << b)]));
        table[s] = static_cast<std::uint8_t>(best);
      }
    }
  }
  int rank(Mask s) const override { return table[s]; }
};

struct MinorOracle final : RankOracle {
  // Positions in the parent matroid, one per element of this minor.
  std::shared_ptr<const Matroid> parent;
  std::vector<int> parent_pos;
  Mask contract = 0;  // in parent coordinates
  int contract_rank = 0;

  int rank(Mask s) const override {
    Mask up = contract;
    for (int b : bits_of(s))
      up |= Mask(1) << parent_pos[static_cast<size_t>(b)];
    return parent->rank(up) - contract_rank;
  }
};

struct FuncOracle final : RankOracle {
  std::function<int(Mask)> fn;
  int rank(Mask s) const override { return fn(s); }
};

struct SumOracle final : RankOracle {
  std::vector<Matroid> parts;
  std::vector<Mask> part_masks;  // positions of each part in the sum

  int rank(Mask s) const override {
    int acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      Mask inside = 0;
      int bit = 0;
      for (int b : bits_of(part_masks[i])) {
        if (s & (Mask(1) << b)) inside |= Mask(1) << bit;
        ++bit;
      }
      acc += parts[i].rank(inside);
    }
    return acc;
  }
};

}  // namespace

struct Matroid::Impl {
  std::vector<std::string> labels;
  std::unique_ptr<RankOracle> oracle;
  bool matrix_provenance = false;

  mutable std::shared_mutex mutex;
  mutable std::map<Mask, int> rank_cache;
  mutable std::map<Mask, Mask> closure_cache;
  mutable std::map<Mask, std::vector<Mask>> component_cache;
  mutable std::optional<std::vector<Mask>> flats_cache;

  int n() const { return static_cast<int>(labels.size()); }
};

int Matroid::n() const { return impl_->n(); }
const std::vector<std::string>& Matroid::labels() const {
  return impl_->labels;
}
const std::string& Matroid::label(int i) const {
  return impl_->labels[static_cast<size_t>(i)];
}

int Matroid::position(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (impl_->labels[static_cast<size_t>(i)] == label) return i;
  return -1;
}

Mask Matroid::mask_of(const std::vector<std::string>& labs) const {
  Mask m = 0;
  for (const std::string& l : labs) {
    int p = position(l);
    if (p < 0) throw Error("unknown label: " + l);
    m |= Mask(1) << p;
  }
  return m;
}

Matroid Matroid::from_rational_matrix(const RatMat& columns,
                                      std::vector<std::string> labels) {
  if (columns.size() != labels.size())
    throw Error("matrix matroid: label count must match column count");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw Error("matrix matroid: duplicate labels");
  }
  size_t dim = columns.empty() ? 0 : columns[0].size();
  for (const RatVec& c : columns)
    if (c.size() != dim) throw Error("matrix matroid: dimension mismatch");
  if (columns.size() > 31) throw Error("matrix matroid: ground set too large");
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  auto oracle = std::make_unique<MatrixOracle>();
  oracle->columns = columns;
  impl->oracle = std::move(oracle);
  impl->matrix_provenance = true;
  return Matroid(std::move(impl));
}

Matroid Matroid::from_circuits(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& circuits) {
  if (static_cast<int>(labels.size()) > kCircuitGuard)
    throw Error("circuit matroid: guard exceeded (|E| <= 10)");
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  auto oracle = std::make_unique<CircuitOracle>();
  oracle->n = impl->n();
  auto pos = [&](const std::string& l) {
    for (size_t i = 0; i < impl->labels.size(); ++i)
      if (impl->labels[i] == l) return static_cast<int>(i);
    throw Error("circuit matroid: unknown label " + l);
  };
  for (const auto& c : circuits) {
    if (c.empty()) throw Error("circuit matroid: empty circuit");
    Mask m = 0;
    for (const std::string& l : c) m |= Mask(1) << pos(l);
    oracle->circuits.push_back(m);
  }
  // The list must be an antichain: no circuit inside another.
  for (Mask a : oracle->circuits)
    for (Mask b : oracle->circuits)
      if (a != b && (a & b) == a)
        throw Error("circuit matroid: circuit contains another");
  oracle->build();
  impl->oracle = std::move(oracle);
  Matroid m(std::move(impl));
  // The stated circuits must come back out as circuits of the result.
  for (const auto& c : circuits) {
    Mask mask = m.mask_of(c);
    if (m.is_independent(mask)) throw Error("circuit matroid: invalid list");
    for (int b : bits_of(mask))
      if (!m.is_independent(mask & ~(Mask(1) << b)))
        throw Error("circuit matroid: listed set is not minimal dependent");
  }
  return m;
}

Matroid Matroid::from_rank_function(std::vector<std::string> labels,
                                    std::function<int(Mask)> rank) {
  if (labels.size() > 31) throw Error("matroid: ground set too large");
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  auto oracle = std::make_unique<FuncOracle>();
  oracle->fn = std::move(rank);
  impl->oracle = std::move(oracle);
  return Matroid(std::move(impl));
}

bool Matroid::has_matrix() const { return impl_->matrix_provenance; }

const RatMat& Matroid::matrix() const {
  if (!impl_->matrix_provenance) throw Error("matroid has no matrix");
  return static_cast<const MatrixOracle*>(impl_->oracle.get())->columns;
}

int Matroid::rank(Mask s) const {
  if (s & ~ground()) throw Error("rank: subset outside ground set");
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->rank_cache.find(s);
    if (it != impl_->rank_cache.end()) return it->second;
  }
  int r = impl_->oracle->rank(s);
  std::unique_lock lock(impl_->mutex);
  impl_->rank_cache[s] = r;
  return r;
}

Mask Matroid::closure(Mask s) const {
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->closure_cache.find(s);
    if (it != impl_->closure_cache.end()) return it->second;
  }
  int rs = rank(s);
  Mask cl = s;
  for (int e = 0; e < n(); ++e) {
    Mask bit = Mask(1) << e;
    if (s & bit) continue;
    if (rank(s | bit) == rs) cl |= bit;
  }
  std::unique_lock lock(impl_->mutex);
  impl_->closure_cache[s] = cl;
  return cl;
}

Mask Matroid::loops() const { return n() == 0 ? 0 : closure(0); }

const std::vector<Mask>& Matroid::flats() const {
  {
    std::shared_lock lock(impl_->mutex);
    if (impl_->flats_cache) return *impl_->flats_cache;
  }
  if (n() > kFlatEnumGuard)
    throw Error("flats: guard exceeded (|E| <= 20)");
  // Level-by-level: covers of a flat F are the closures cl(F + e).
  std::set<Mask> all;
  std::vector<Mask> level = {closure(0)};
  all.insert(level[0]);
  while (!level.empty()) {
    std::set<Mask> next;
    for (Mask f : level) {
      for (int e = 0; e < n(); ++e) {
        Mask bit = Mask(1) << e;
        if (f & bit) continue;
        next.insert(closure(f | bit));
      }
    }
    level.clear();
    for (Mask f : next)
      if (all.insert(f).second) level.push_back(f);
  }
  std::vector<Mask> flats(all.begin(), all.end());
  std::sort(flats.begin(), flats.end(), [&](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  std::unique_lock lock(impl_->mutex);
  if (!impl_->flats_cache) impl_->flats_cache = std::move(flats);
  return *impl_->flats_cache;
}

FinitePoset Matroid::flats_lattice() const {
  const std::vector<Mask>& fs = flats();
  std::vector<std::string> ids;
  ids.reserve(fs.size());
  for (Mask f : fs) ids.push_back(set_string(f));
  size_t k = fs.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      leq[i][j] = ((fs[i] & fs[j]) == fs[i]) ? 1 : 0;
  return FinitePoset::from_leq_matrix(std::move(ids), std::move(leq));
}

std::vector<Mask> Matroid::connected_components(Mask within) const {
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->component_cache.find(within);
    if (it != impl_->component_cache.end()) return it->second;
  }
  // Components via the fundamental graph of a basis of M|within: b ~ e
  // whenever b lies in the basic circuit of e.  Loops stay singletons.
  std::vector<int> elems = bits_of(within);
  std::vector<int> comp(static_cast<size_t>(n()), -1);
  // Greedy basis of the restriction.
  Mask basis = 0;
  for (int e : elems) {
    Mask bit = Mask(1) << e;
    if (rank(basis | bit) > rank(basis)) basis |= bit;
  }
  // Union-find over elems.
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : elems) parent[e] = e;
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  int rb = rank(basis);
  for (int e : elems) {
    Mask bit = Mask(1) << e;
    if (basis & bit) continue;
    if (rank(bit) == 0) continue;  // loop
    // Basic circuit of e with respect to the basis of the restriction:
    // b participates iff e is not in the span of basis - b.
    for (int b : bits_of(basis)) {
      Mask without = basis & ~(Mask(1) << b);
      if (rank(without | bit) == rb) unite(e, b);
    }
  }
  std::map<int, Mask> groups;
  for (int e : elems) groups[find(e)] |= Mask(1) << e;
  std::vector<Mask> out;
  for (auto& [root, mask] : groups) out.push_back(mask);
  std::sort(out.begin(), out.end());
  std::unique_lock lock(impl_->mutex);
  impl_->component_cache[within] = out;
  return out;
}

Matroid Matroid::minor(Mask restrict_to, Mask contract) const {
  if ((contract & restrict_to) != contract)
    throw Error("minor: contract must be contained in restrict_to");
  if ((restrict_to & ~ground()) != 0)
    throw Error("minor: restrict_to outside ground set");
  auto oracle = std::make_unique<MinorOracle>();
  oracle->parent = std::make_shared<Matroid>(*this);
  oracle->contract = contract;
  oracle->contract_rank = rank(contract);
  auto impl = std::make_shared<Impl>();
  for (int b : bits_of(restrict_to & ~contract)) {
    oracle->parent_pos.push_back(b);
    impl->labels.push_back(label(b));
  }
  impl->oracle = std::move(oracle);
  return Matroid(std::move(impl));
}

Matroid Matroid::direct_sum(const std::vector<Matroid>& parts) {
  auto impl = std::make_shared<Impl>();
  auto oracle = std::make_unique<SumOracle>();
  std::set<std::string> seen;
  int offset = 0;
  for (const Matroid& part : parts) {
    Mask mask = 0;
    for (int i = 0; i < part.n(); ++i) {
      if (!seen.insert(part.label(i)).second)
        throw Error("direct_sum: label collision at " + part.label(i));
      impl->labels.push_back(part.label(i));
      mask |= Mask(1) << offset;
      ++offset;
    }
    if (offset > 31) throw Error("direct_sum: ground set too large");
    oracle->parts.push_back(part);
    oracle->part_masks.push_back(mask);
  }
  impl->oracle = std::move(oracle);
  return Matroid(std::move(impl));
}

long long Matroid::mu() const {
  FinitePoset l = flats_lattice();
  auto bot = l.bottom();
  auto top = l.top();
  if (!bot || !top) throw Error("mu: flat lattice has no bounds");
  return l.mobius(*bot, *top);
}

long long Matroid::beta() const {
  FinitePoset l = flats_lattice();
  const std::vector<Mask>& fs = flats();
  auto bot = l.bottom();
  if (!bot) throw Error("beta: flat lattice has no bottom");
  long long acc = 0;
  for (size_t i = 0; i < fs.size(); ++i)
    acc += l.mobius(*bot, static_cast<int>(i)) * rank(fs[i]);
  int r = rank();
  return (r % 2 == 0) ? acc : -acc;
}

Mask Matroid::basic_circuit(Mask basis, int e) const {
  if (!is_basis(basis)) throw Error("basic_circuit: not a basis");
  Mask bit = Mask(1) << e;
  if (basis & bit) throw Error("basic_circuit: element lies in the basis");
  int r = rank();
  Mask circuit = bit;
  for (int b : bits_of(basis)) {
    Mask without = basis & ~(Mask(1) << b);
    if (rank(without | bit) == r) circuit |= Mask(1) << b;
  }
  return circuit;
}

Matroid::CircuitousResult Matroid::is_circuitous(Mask basis) const {
  if (!is_basis(basis)) throw Error("is_circuitous: not a basis");
  CircuitousResult res;
  // Connected flats of rank >= 2 spanned by subsets of B.  A singleton flat
  // admits no basic circuit, so rank-one flats are not quantified over.
  std::set<Mask> targets;
  std::vector<int> bbits = bits_of(basis);
  size_t k = bbits.size();
  for (Mask sub = 0; sub < (Mask(1) << k); ++sub) {
    Mask i = 0;
    for (int b : bits_of(sub)) i |= Mask(1) << bbits[static_cast<size_t>(b)];
    Mask f = closure(i);
    if (rank(f) < 2) continue;
    if (connected_components(f).size() != 1) continue;
    targets.insert(f);
  }
  for (Mask f : targets) {
    int found = -1;
    for (int e = 0; e < n(); ++e) {
      if (basis & (Mask(1) << e)) continue;
      if (closure(basic_circuit(basis, e)) == f) {
        found = e;
        break;
      }
    }
    res.flats_checked.push_back(f);
    res.spanning_element.push_back(found);
    if (found < 0) {
      res.ok = false;
      res.witness_flat = f;
    }
  }
  return res;
}

std::vector<Mask> Matroid::circuits() const {
  if (n() > 16) throw Error("circuits: ground set too large");
  std::vector<Mask> out;
  for (Mask s = 1; s <= ground(); ++s) {
    if (is_independent(s)) continue;
    bool minimal = true;
    for (int b : bits_of(s))
      if (!is_independent(s & ~(Mask(1) << b))) { minimal = false; break; }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<std::uint8_t> Matroid::rank_table() const {
  if (n() > 16) throw Error("rank_table: ground set too large");
  size_t size = size_t(1) << n();
  std::vector<std::uint8_t> t(size);
  for (Mask s = 0; s < size; ++s)
    t[s] = static_cast<std::uint8_t>(rank(s));
  return t;
}

bool same_rank_function(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> to_b(static_cast<size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) {
    int j = b.position(a.label(i));
    if (j < 0) return false;
    to_b[static_cast<size_t>(i)] = j;
  }
  if (a.n() > 16) throw Error("same_rank_function: ground set too large");
  for (Mask s = 0; s <= a.ground(); ++s) {
    Mask t = 0;
    for (int bit : bits_of(s))
      t |= Mask(1) << to_b[static_cast<size_t>(bit)];
    if (a.rank(s) != b.rank(t)) return false;
  }
  return true;
}

bool fs_criterion(const Matroid& m) {
  const std::vector<Mask>& fs = m.flats();
  for (Mask g : fs) {
    if (!m.is_connected(g)) continue;
    for (Mask f : fs) {
      if (f == g || (f & g) != f) continue;
      Matroid quotient = m.minor(g, f);
      if (quotient.n() == 0) continue;
      if (!quotient.is_connected(quotient.ground())) return false;
    }
  }
  return true;
}

}  // namespace bkit
