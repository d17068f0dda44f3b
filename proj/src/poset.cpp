#include "bkit/poset.hpp"

#include <algorithm>
#include <set>

namespace bkit {

FinitePoset FinitePoset::from_leq(
    std::vector<std::string> elements,
    const std::function<bool(const std::string&, const std::string&)>& leq) {
  size_t n = elements.size();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = leq(elements[i], elements[j]) ? 1 : 0;
  return from_leq_matrix(std::move(elements), std::move(m));
}

FinitePoset FinitePoset::from_leq_matrix(std::vector<std::string> elements,
                                         std::vector<std::vector<char>> leq) {
  FinitePoset p;
  p.elements_ = std::move(elements);
  p.leq_ = std::move(leq);
  p.validate();
  return p;
}

void FinitePoset::validate() const {
  size_t n = elements_.size();
  {
    std::set<std::string> seen(elements_.begin(), elements_.end());
    if (seen.size() != n) throw Error("poset: duplicate element ids");
  }
  for (size_t i = 0; i < n; ++i)
    if (!leq_[i][i]) throw Error("poset: relation not reflexive");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw Error("poset: antisymmetry violated at " + elements_[i] + "," +
                    elements_[j]);
  // Transitivity over packed rows: leq(i,j) requires row(j) subset row(i).
  size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (leq_[i][j]) up[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!leq_[i][j]) continue;
      for (size_t w = 0; w < words; ++w)
        if (up[j * words + w] & ~up[i * words + w])
          throw Error("poset: relation not transitive");
    }
}

int FinitePoset::index_of(const std::string& id) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == id) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  if (memo_->covers) return *memo_->covers;
  size_t n = elements_.size();
  size_t words = (n + 63) / 64;
  // up[a] = everything above a, down[b] = everything below b (packed).
  std::vector<std::uint64_t> up(n * words, 0), down(n * words, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (leq_[a][b]) {
        up[a * words + b / 64] |= std::uint64_t(1) << (b % 64);
        down[b * words + a / 64] |= std::uint64_t(1) << (a % 64);
      }
  std::vector<std::pair<int, int>> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      // a is covered by b iff the open interval (a, b) is empty.
      bool cover = true;
      for (size_t w = 0; w < words && cover; ++w) {
        std::uint64_t mid = up[a * words + w] & down[b * words + w];
        mid &= ~((a / 64 == w) ? (std::uint64_t(1) << (a % 64)) : 0);
        mid &= ~((b / 64 == w) ? (std::uint64_t(1) << (b % 64)) : 0);
        if (mid) cover = false;
      }
      if (cover) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(out.begin(), out.end());
  memo_->covers = out;
  return out;
}

std::optional<int> FinitePoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins[0];
  return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs[0];
  return std::nullopt;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool minimal = true;
    for (int b = 0; b < size() && minimal; ++b)
      if (b != a && leq(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool maximal = true;
    for (int b = 0; b < size() && maximal; ++b)
      if (b != a && leq(a, b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

int FinitePoset::height(int a) const {
  // Longest chain ending at a; iterative over a linear extension by leq-count.
  int n = size();
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::vector<int> below(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && leq(j, i)) ++below[static_cast<size_t>(i)];
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return below[static_cast<size_t>(x)] <
                                       below[static_cast<size_t>(y)]; });
  std::vector<int> h(static_cast<size_t>(n), 0);
  for (int x : order)
    for (int y : order)
      if (y != x && leq(y, x))
        h[static_cast<size_t>(x)] =
            std::max(h[static_cast<size_t>(x)], h[static_cast<size_t>(y)] + 1);
  return h[static_cast<size_t>(a)];
}

long long FinitePoset::mobius(int x, int y) const {
  if (x < 0 || y < 0 || x >= size() || y >= size())
    throw Error("mobius: element out of range");
  if (!leq(x, y)) throw Error("not comparable");
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->mobius.find({x, y});
    if (it != memo_->mobius.end()) return it->second;
  }
  long long value;
  if (x == y) {
    value = 1;
  } else {
    // mu(x,y) = - sum over x <= z < y of mu(x,z).
    long long acc = 0;
    for (int z = 0; z < size(); ++z)
      if (leq(x, z) && less(z, y)) acc += mobius(x, z);
    value = -acc;
  }
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->mobius[{x, y}] = value;
  return value;
}

int FinitePoset::join(int a, int b) const {
  std::vector<int> ub;
  for (int c = 0; c < size(); ++c)
    if (leq(a, c) && leq(b, c)) ub.push_back(c);
  for (int c : ub) {
    bool least = true;
    for (int d : ub)
      if (!leq(c, d)) { least = false; break; }
    if (least) return c;
  }
  return -1;
}

int FinitePoset::meet(int a, int b) const {
  std::vector<int> lb;
  for (int c = 0; c < size(); ++c)
    if (leq(c, a) && leq(c, b)) lb.push_back(c);
  for (int c : lb) {
    bool greatest = true;
    for (int d : lb)
      if (!leq(d, c)) { greatest = false; break; }
    if (greatest) return c;
  }
  return -1;
}

bool FinitePoset::is_lattice() const {
  if (size() == 0) return false;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (join(a, b) < 0 || meet(a, b) < 0) return false;
  return true;
}

SimplicialComplex SimplicialComplex::from_faces(
    std::vector<std::string> vertices, std::vector<std::vector<int>> faces) {
  for (std::vector<int>& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= static_cast<int>(vertices.size()))
        throw Error("complex: vertex index out of range");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // Drop faces contained in another face.
  std::vector<std::vector<int>> maximal;
  for (size_t i = 0; i < faces.size(); ++i) {
    bool contained = false;
    for (size_t j = 0; j < faces.size() && !contained; ++j) {
      if (i == j || faces[j].size() < faces[i].size()) continue;
      if (faces[i].size() == faces[j].size() && i > j && faces[i] == faces[j])
        contained = true;
      if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                        faces[i].end()) &&
          faces[i] != faces[j])
        contained = true;
    }
    if (!contained && !faces[i].empty()) maximal.push_back(faces[i]);
  }
  std::vector<char> used(vertices.size(), 0);
  for (const auto& f : maximal)
    for (int v : f) used[static_cast<size_t>(v)] = 1;
  for (size_t v = 0; v < vertices.size(); ++v)
    if (!used[v])
      throw Error("complex: vertex " + vertices[v] + " is in no face");
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  k.facets_ = std::move(maximal);
  return k;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
  std::set<std::vector<int>> faces;
  for (const auto& facet : facets_) {
    size_t m = facet.size();
    for (Mask sub = 1; sub < (Mask(1) << m); ++sub) {
      std::vector<int> face;
      for (int b : bits_of(sub)) face.push_back(facet[static_cast<size_t>(b)]);
      faces.insert(std::move(face));
    }
  }
  return {faces.begin(), faces.end()};
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& face : all_faces()) {
    size_t d = face.size() - 1;
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (long long fd : f_vector()) {
    chi += sign * fd;
    sign = -sign;
  }
  return chi;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  return euler_characteristic() - 1;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& facet : facets_)
    d = std::max(d, static_cast<int>(facet.size()) - 1);
  return d;
}

bool SimplicialComplex::has_face(const std::vector<int>& face) const {
  std::vector<int> f = face;
  std::sort(f.begin(), f.end());
  for (const auto& facet : facets_)
    if (std::includes(facet.begin(), facet.end(), f.begin(), f.end()))
      return true;
  return false;
}

SimplicialComplex order_complex(const FinitePoset& p, bool strip_bounds) {
  std::vector<int> keep;
  if (strip_bounds) {
    auto bot = p.bottom();
    auto top = p.top();
    if (!bot || !top)
      throw Error("order_complex: bounds missing or ambiguous");
    for (int i = 0; i < p.size(); ++i)
      if (i != *bot && i != *top) keep.push_back(i);
  } else {
    for (int i = 0; i < p.size(); ++i) keep.push_back(i);
  }
  std::vector<std::string> vertices;
  std::vector<int> of_poset(keep.begin(), keep.end());
  std::vector<int> to_vertex(static_cast<size_t>(p.size()), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    vertices.push_back(p.element(keep[i]));
    to_vertex[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  }
  // Faces are chains; facets are the maximal ones, found by DFS.
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int last) {
    bool extended = false;
    for (int next : of_poset) {
      if (p.less(last, next)) {
        current.push_back(next);
        extend(next);
        current.pop_back();
        extended = true;
      }
    }
    if (!extended) {
      std::vector<int> chain;
      for (int e : current) chain.push_back(to_vertex[static_cast<size_t>(e)]);
      chains.push_back(std::move(chain));
    }
  };
  for (int start : of_poset) {
    bool minimal = true;
    for (int other : of_poset)
      if (other != start && p.less(other, start)) { minimal = false; break; }
    if (!minimal) continue;
    current = {start};
    extend(start);
  }
  return SimplicialComplex::from_faces(std::move(vertices), std::move(chains));
}

AntiIsoResult check_anti_isomorphism(
    const FinitePoset& p, const FinitePoset& q,
    const std::map<std::string, std::string>& f) {
  AntiIsoResult res;
  if (p.size() != q.size()) {
    res.witness = "size mismatch";
    return res;
  }
  std::vector<int> image(static_cast<size_t>(p.size()), -1);
  std::set<int> hit;
  for (int i = 0; i < p.size(); ++i) {
    auto it = f.find(p.element(i));
    if (it == f.end()) {
      res.witness = "map undefined on " + p.element(i);
      return res;
    }
    int j = q.index_of(it->second);
    if (j < 0) {
      res.witness = "image not in codomain: " + it->second;
      return res;
    }
    if (hit.count(j)) {
      res.witness = "not injective at " + it->second;
      return res;
    }
    hit.insert(j);
    image[static_cast<size_t>(i)] = j;
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      bool lhs = p.leq(a, b);
      bool rhs = q.leq(image[static_cast<size_t>(b)],
                       image[static_cast<size_t>(a)]);
      if (lhs != rhs) {
        res.witness = "order mismatch at (" + p.element(a) + ", " +
                      p.element(b) + ")";
        return res;
      }
    }
  res.ok = true;
  return res;
}

}  // namespace bkit
