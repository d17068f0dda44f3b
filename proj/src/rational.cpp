#include "bkit/rational.hpp"

#include <algorithm>

namespace bkit {

Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

namespace {

// Row-reduce a dense rational matrix in place; returns the pivot count.
int row_reduce(std::vector<RatVec>& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rat_rank(const std::vector<const RatVec*>& cols) {
  if (cols.empty()) return 0;
  std::vector<RatVec> rows;
  rows.reserve(cols.size());
  for (const RatVec* c : cols) rows.push_back(*c);
  return row_reduce(rows);
}

int rat_rank(const RatMat& cols) {
  std::vector<const RatVec*> ptrs;
  ptrs.reserve(cols.size());
  for (const RatVec& c : cols) ptrs.push_back(&c);
  return rat_rank(ptrs);
}

std::optional<RatVec> in_span(const std::vector<const RatVec*>& basis,
                              const RatVec& target) {
  // Solve sum_i x_i basis_i = target by elimination on the augmented system.
  size_t d = target.size();
  size_t k = basis.size();
  std::vector<RatVec> aug(d, RatVec(k + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = (*basis[j])[i];
    aug[i][k] = target[i];
  }
  size_t r = 0;
  std::vector<int> pivot_col(k, -1);
  for (size_t c = 0; c < k && r < d; ++c) {
    size_t p = r;
    while (p < d && aug[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(aug[p], aug[r]);
    Rat inv = aug[r][c];
    for (size_t j = c; j <= k; ++j) aug[r][j] /= inv;
    for (size_t i = 0; i < d; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col[c] = static_cast<int>(r);
    ++r;
  }
  for (size_t i = r; i < d; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  // Inconsistency can also hide in rows whose pivots were skipped.
  RatVec x(k, Rat(0));
  for (size_t c = 0; c < k; ++c)
    if (pivot_col[c] >= 0) x[c] = aug[static_cast<size_t>(pivot_col[c])][k];
  // Verify (free columns were set to zero).
  for (size_t i = 0; i < d; ++i) {
    Rat acc(0);
    for (size_t j = 0; j < k; ++j) acc += x[j] * (*basis[j])[i];
    if (acc != target[i]) return std::nullopt;
  }
  return x;
}

std::vector<RatVec> nullspace_of_rows(const std::vector<RatVec>& rows_in) {
  if (rows_in.empty()) throw Error("nullspace: empty system has no dimension");
  size_t d = rows_in[0].size();
  std::vector<RatVec> m = rows_in;
  size_t rows = m.size();
  size_t r = 0;
  std::vector<int> pivot_of_col(d, -1);
  for (size_t c = 0; c < d && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = m[r][c];
    for (size_t j = c; j < d; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < d; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<RatVec> basis;
  for (size_t c = 0; c < d; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RatVec v(d, Rat(0));
    v[c] = 1;
    for (size_t c2 = 0; c2 < d; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = -m[static_cast<size_t>(pivot_of_col[c2])][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool strict_feasible(std::vector<RatVec> rows) {
  if (rows.empty()) return true;
  size_t d = rows[0].size();
  auto all_zero = [](const RatVec& v) {
    for (const Rat& q : v)
      if (q != 0) return false;
    return true;
  };
  for (const RatVec& v : rows)
    if (all_zero(v)) return false;  // 0 > 0
  for (size_t var = 0; var < d; ++var) {
    std::vector<RatVec> pos, neg, zero;
    for (RatVec& v : rows) {
      int s = sgn(v[var]);
      if (s > 0)
        pos.push_back(std::move(v));
      else if (s < 0)
        neg.push_back(std::move(v));
      else
        zero.push_back(std::move(v));
    }
    rows = std::move(zero);
    for (const RatVec& p : pos) {
      for (const RatVec& n : neg) {
        RatVec comb(d, Rat(0));
        Rat a = -n[var];  // > 0
        Rat b = p[var];   // > 0
        for (size_t j = 0; j < d; ++j) comb[j] = a * p[j] + b * n[j];
        if (all_zero(comb)) return false;
        rows.push_back(std::move(comb));
      }
    }
  }
  return true;
}

}  // namespace bkit
