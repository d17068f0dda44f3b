#include "bkit/oriented.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bkit {

namespace {
constexpr int kCovectorGuard = 14;
}

std::string SignVector::to_string(int n) const {
  std::string s;
  s.reserve(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) {
    int v = sign(e);
    s += (v > 0) ? '+' : (v < 0) ? '-' : '0';
  }
  return s;
}

SignVector SignVector::from_string(const std::string& s) {
  SignVector v;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+')
      v.plus |= Mask(1) << i;
    else if (s[i] == '-')
      v.minus |= Mask(1) << i;
    else if (s[i] != '0')
      throw Error("sign vector: bad character");
  }
  return v;
}

OrientedMatroid OrientedMatroid::from_columns(const RatMat& columns,
                                              std::vector<std::string> labels,
                                              Mask reorientation) {
  OrientedMatroid om;
  om.m_ = Matroid::from_rational_matrix(columns, std::move(labels));
  om.cols_ = columns;
  om.reorient_ = reorientation & om.m_.ground();
  return om;
}

RatVec OrientedMatroid::signed_column(int e) const {
  RatVec c = cols_[static_cast<size_t>(e)];
  if (reorient_ & (Mask(1) << e))
    for (Rat& q : c) q = -q;
  return c;
}

SignVector OrientedMatroid::sign_vector_of(const RatVec& functional) const {
  SignVector v;
  for (int e = 0; e < n(); ++e) {
    Rat acc(0);
    RatVec col = signed_column(e);
    for (size_t i = 0; i < col.size(); ++i) acc += functional[i] * col[i];
    int s = sign_of(acc);
    if (s > 0) v.plus |= Mask(1) << e;
    if (s < 0) v.minus |= Mask(1) << e;
  }
  return v;
}

std::vector<SignVector> OrientedMatroid::cocircuits() const {
  int r = rank();
  std::vector<SignVector> out;
  for (Mask f : m_.flats()) {
    if (m_.rank(f) != r - 1) continue;
    // A functional vanishing exactly on the span of this hyperplane flat.
    std::vector<RatVec> rows;
    for (int e : bits_of(f)) rows.push_back(signed_column(e));
    RatVec normal;
    if (rows.empty()) {
      // Rank-1 matroid: any functional positive on some nonloop column.
      int e0 = -1;
      for (int e = 0; e < n(); ++e)
        if (m_.rank(Mask(1) << e) == 1) { e0 = e; break; }
      if (e0 < 0) continue;
      normal = signed_column(e0);
    } else {
      for (const RatVec& cand : nullspace_of_rows(rows)) {
        SignVector sv = sign_vector_of(cand);
        if (sv.support() != 0) { normal = cand; break; }
      }
      if (normal.empty()) throw Error("cocircuits: no valid normal found");
    }
    SignVector sv = sign_vector_of(normal);
    out.push_back(sv);
    out.push_back(sv.negated());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<SignVector> closure_under_composition(
    const std::vector<SignVector>& cocircuits, bool parallel) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<SignVector> all;
  auto add = [&](const SignVector& v) {
    if (seen.insert(v.key()).second) {
      all.push_back(v);
      return true;
    }
    return false;
  };
  add(SignVector{});
  std::vector<SignVector> frontier;
  for (const SignVector& c : cocircuits)
    if (add(c)) frontier.push_back(c);

  while (!frontier.empty()) {
    std::vector<SignVector> produced;
    if (parallel) {
#ifdef _OPENMP
      int threads = omp_get_max_threads();
#else
      int threads = 1;
#endif
      std::vector<std::vector<SignVector>> local(
          static_cast<size_t>(threads));
#pragma omp parallel for schedule(static)
      for (size_t i = 0; i < frontier.size(); ++i) {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        for (const SignVector& c : cocircuits) {
          SignVector z = frontier[i].compose(c);
          if (!seen.count(z.key()))
            local[static_cast<size_t>(tid)].push_back(z);
        }
      }
      for (auto& bucket : local)
        for (const SignVector& z : bucket)
          if (add(z)) produced.push_back(z);
    } else {
      for (const SignVector& x : frontier)
        for (const SignVector& c : cocircuits) {
          SignVector z = x.compose(c);
          if (add(z)) produced.push_back(z);
        }
    }
    frontier = std::move(produced);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<SignVector> OrientedMatroid::covectors() const {
  if (n() > kCovectorGuard) throw Error("covectors: guard exceeded (|E| <= 14)");
  return closure_under_composition(cocircuits(), true);
}

std::vector<SignVector> OrientedMatroid::covectors_serial() const {
  if (n() > kCovectorGuard) throw Error("covectors: guard exceeded (|E| <= 14)");
  return closure_under_composition(cocircuits(), false);
}

std::vector<SignVector> OrientedMatroid::topes() const {
  Mask nonloops = m_.ground() & ~m_.loops();
  std::vector<SignVector> out;
  for (const SignVector& v : covectors())
    if (v.support() == nonloops) out.push_back(v);
  return out;
}

bool OrientedMatroid::is_tope(const SignVector& t) const {
  for (const SignVector& v : topes())
    if (v == t) return true;
  return false;
}

bool OrientedMatroid::is_acyclic() const {
  // Acyclic means the all-plus vector (on every element) is a tope; a loop
  // rules this out since covectors vanish on loops.
  if (m_.loops() != 0) return false;
  SignVector allplus{m_.ground(), 0};
  for (const SignVector& v : covectors())
    if (v == allplus) return true;
  return false;
}

std::vector<Mask> OrientedMatroid::positive_flats() const {
  std::set<Mask> flats;
  for (const SignVector& v : covectors())
    if (v.minus == 0) flats.insert(v.zero_set(n()));
  return {flats.begin(), flats.end()};
}

std::vector<Mask> OrientedMatroid::positive_flats_wrt(
    const SignVector& t) const {
  std::set<Mask> flats;
  for (const SignVector& v : covectors())
    if (v.below(t)) flats.insert(v.zero_set(n()));
  return {flats.begin(), flats.end()};
}

std::vector<Mask> OrientedMatroid::positive_flats_feasibility() const {
  // F is positive iff some functional vanishes on F and is strictly
  // positive elsewhere; decided exactly by Fourier-Motzkin on the
  // coordinates of the nullspace of F's columns.
  std::vector<Mask> out;
  for (Mask f : m_.flats()) {
    Mask rest = m_.ground() & ~f;
    if (rest == 0) {  // the zero covector is positive, so E qualifies
      out.push_back(f);
      continue;
    }
    std::vector<RatVec> eq_rows;
    for (int e : bits_of(f)) eq_rows.push_back(signed_column(e));
    std::vector<RatVec> basis;
    if (eq_rows.empty()) {
      size_t d = cols_.empty() ? 0 : cols_[0].size();
      for (size_t i = 0; i < d; ++i) {
        RatVec v(d, Rat(0));
        v[i] = 1;
        basis.push_back(std::move(v));
      }
    } else {
      basis = nullspace_of_rows(eq_rows);
    }
    if (basis.empty()) continue;
    std::vector<RatVec> strict;
    bool possible = true;
    for (int e : bits_of(rest)) {
      RatVec col = signed_column(e);
      RatVec row(basis.size(), Rat(0));
      bool nonzero = false;
      for (size_t j = 0; j < basis.size(); ++j) {
        Rat acc(0);
        for (size_t i = 0; i < col.size(); ++i) acc += basis[j][i] * col[i];
        row[j] = acc;
        if (acc != 0) nonzero = true;
      }
      if (!nonzero) { possible = false; break; }
      strict.push_back(std::move(row));
    }
    if (possible && strict_feasible(std::move(strict))) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset OrientedMatroid::las_vergnas_lattice() const {
  if (!is_acyclic()) throw Error("not acyclic");
  std::vector<Mask> pf = positive_flats();
  std::sort(pf.begin(), pf.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  std::vector<std::string> ids;
  for (Mask f : pf) ids.push_back(m_.set_string(f));
  size_t k = pf.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      leq[i][j] = ((pf[i] & pf[j]) == pf[i]) ? 1 : 0;
  return FinitePoset::from_leq_matrix(std::move(ids), std::move(leq));
}

OrientedMatroid OrientedMatroid::reorient(const SignVector& tope) const {
  if (!is_tope(tope)) throw Error("reorient: not a tope");
  OrientedMatroid om = *this;
  om.reorient_ = reorient_ ^ tope.minus;
  return om;
}

int OrientedMatroid::chirotope(const std::vector<int>& ordered_basis) const {
  int r = rank();
  if (static_cast<int>(ordered_basis.size()) != r)
    throw Error("chirotope: need exactly rank many elements");
  std::vector<RatVec> rows;  // picked columns, one per basis element
  for (int e : ordered_basis) rows.push_back(signed_column(e));
  size_t d = rows.empty() ? 0 : rows[0].size();
  // Project onto a fixed set of coordinate rows where the FULL matrix has
  // rank r (leftmost greedy choice).  The projection is a fixed isomorphism
  // of the column span, so all determinant signs are scaled by one global
  // sign, as a chirotope is.
  std::vector<size_t> picked;
  for (size_t c = 0; c < d && picked.size() < static_cast<size_t>(r); ++c) {
    std::vector<size_t> tryrows = picked;
    tryrows.push_back(c);
    std::vector<RatVec> sub;
    for (size_t rr : tryrows) {
      RatVec v;
      for (const RatVec& col : cols_) v.push_back(col[rr]);
      sub.push_back(std::move(v));
    }
    std::vector<const RatVec*> ptrs;
    for (const RatVec& v : sub) ptrs.push_back(&v);
    if (rat_rank(ptrs) == static_cast<int>(tryrows.size())) picked = tryrows;
  }
  if (picked.size() != static_cast<size_t>(r))
    throw Error("chirotope: projection failed");
  {
    std::vector<const RatVec*> ptrs;
    for (const RatVec& v : rows) ptrs.push_back(&v);
    if (rat_rank(ptrs) < r) return 0;  // dependent set
  }
  // Determinant of the r x r minor by elimination.
  std::vector<RatVec> m(static_cast<size_t>(r), RatVec(static_cast<size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          rows[static_cast<size_t>(j)][picked[static_cast<size_t>(i)]];
  Rat det(1);
  int swaps = 0;
  for (int c = 0; c < r; ++c) {
    int p = c;
    while (p < r && m[static_cast<size_t>(p)][static_cast<size_t>(c)] == 0)
      ++p;
    if (p == r) return 0;
    if (p != c) {
      std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(c)]);
      ++swaps;
    }
    det *= m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    for (int i = c + 1; i < r; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] == 0) continue;
      Rat f = m[static_cast<size_t>(i)][static_cast<size_t>(c)] /
              m[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int j = c; j < r; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
    }
  }
  int s = sign_of(det);
  return (swaps % 2 == 0) ? s : -s;
}

bool OrientedMatroid::is_generic_column(const RatVec& g,
                                        std::vector<Mask>* violated) const {
  int r = rank();
  bool ok = true;
  if (violated) violated->clear();
  for (Mask f : m_.flats()) {
    if (f == 0 || m_.rank(f) >= r) continue;
    std::vector<const RatVec*> cols;
    for (int e : bits_of(f)) cols.push_back(&cols_[static_cast<size_t>(e)]);
    std::vector<const RatVec*> with = cols;
    RatMat tmp;
    tmp.push_back(g);
    with.push_back(&tmp[0]);
    if (rat_rank(with) != rat_rank(cols) + 1) {
      ok = false;
      if (violated)
        violated->push_back(f);
      else
        return false;
    }
  }
  return ok;
}

AffineExtension OrientedMatroid::generic_extension(std::uint64_t seed) const {
  // Sample integer combinations of a column basis; widen the coordinate
  // range every few rejections.  Deterministic in the seed.
  Mask b = 0;
  for (int e = 0; e < n(); ++e) {
    Mask bit = Mask(1) << e;
    if (m_.rank(b | bit) > m_.rank(b)) b |= bit;
  }
  std::vector<int> basis_cols = bits_of(b);
  size_t d = cols_.empty() ? 0 : cols_[0].size();
  Lcg lcg(seed * 2718281828459045ULL + 1);
  long long radius = 8;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 32 == 0) radius *= 2;
    RatVec g(d, Rat(0));
    for (int e : basis_cols) {
      long lambda = static_cast<long>(lcg.next_int(-radius, radius));
      const RatVec& col = cols_[static_cast<size_t>(e)];
      for (size_t i = 0; i < d; ++i) g[i] += Rat(lambda) * col[i];
    }
    std::vector<Mask> violated;
    if (is_generic_column(g, &violated)) {
      std::vector<Mask> certified;
      for (Mask f : m_.flats())
        if (f != 0 && f != m_.ground()) certified.push_back(f);
      return AffineExtension(*this, g, seed, certified);
    }
  }
}

AffineExtension::AffineExtension(OrientedMatroid base, RatVec g_column,
                                 std::uint64_t seed,
                                 std::vector<Mask> certified_flats)
    : base_(std::move(base)),
      g_(std::move(g_column)),
      seed_(seed),
      certified_(std::move(certified_flats)) {
  RatMat cols;
  std::vector<std::string> labels;
  for (int e = 0; e < base_.n(); ++e) {
    cols.push_back(base_.signed_column(e));
    labels.push_back(base_.label(e));
  }
  cols.push_back(g_);
  labels.push_back("g");
  // Signs of the base columns were already applied above.
  ext_ = OrientedMatroid::from_columns(cols, std::move(labels), 0);
}

std::vector<SignVector> AffineExtension::bounded_topes() const {
  int ne = ext_.n();
  int gpos = ne - 1;
  Mask gbit = Mask(1) << gpos;
  std::vector<SignVector> covs = ext_.covectors();
  std::vector<SignVector> out;
  for (const SignVector& t : covs) {
    if (t.support() != ext_.underlying().ground()) continue;  // topes only
    if (!(t.plus & gbit)) continue;
    bool bounded = true;
    for (const SignVector& y : covs) {
      if (y.support() == 0 || !y.below(t)) continue;
      if (!(y.plus & gbit)) { bounded = false; break; }
    }
    if (!bounded) continue;
    SignVector base_tope{t.plus & ~gbit, t.minus & ~gbit};
    out.push_back(base_tope);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bkit
