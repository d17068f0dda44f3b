#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bkit/util.hpp"

namespace bkit {

// A finite poset over canonical string element ids.  The full comparability
// relation is stored; cover relations are recovered by transitive reduction.
// Immutable after construction, safe for concurrent reads.
class FinitePoset {
 public:
  FinitePoset() = default;

  // `leq` must be reflexive, transitive and antisymmetric on the ids
  // (checked; violations raise Error).
  static FinitePoset from_leq(
      std::vector<std::string> elements,
      const std::function<bool(const std::string&, const std::string&)>& leq);

  static FinitePoset from_leq_matrix(std::vector<std::string> elements,
                                     std::vector<std::vector<char>> leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& element(int i) const {
    return elements_[static_cast<size_t>(i)];
  }
  const std::vector<std::string>& elements() const { return elements_; }
  int index_of(const std::string& id) const;  // -1 when absent

  bool leq(int a, int b) const {
    return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0;
  }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  // Cover pairs (lower, upper), sorted.
  std::vector<std::pair<int, int>> covers() const;

  std::optional<int> bottom() const;
  std::optional<int> top() const;

  // Longest-chain rank from the minimal elements.
  int height(int a) const;

  // Mobius function of the interval [x, y]; memoized.
  // Throws Error("not comparable") unless x <= y.
  long long mobius(int x, int y) const;

  // Least upper / greatest lower bound, or -1 when none exists uniquely.
  int join(int a, int b) const;
  int meet(int a, int b) const;
  bool is_lattice() const;

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<char>> leq_;
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<int, int>, long long> mobius;
    std::optional<std::vector<std::pair<int, int>>> covers;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

  void validate() const;
};

// A simplicial complex with canonical string vertex ids.  Faces are stored
// through their inclusion-maximal members.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Keeps only inclusion-maximal faces; every vertex must occur in a face.
  static SimplicialComplex from_faces(std::vector<std::string> vertices,
                                      std::vector<std::vector<int>> faces);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  // All nonempty faces, each a sorted vertex-index list.
  std::vector<std::vector<int>> all_faces() const;

  // f[d] = number of d-dimensional faces.
  std::vector<long long> f_vector() const;

  long long euler_characteristic() const;          // sum (-1)^d f_d
  long long reduced_euler_characteristic() const;  // euler - 1

  int dimension() const;  // -1 for the empty complex

  bool has_face(const std::vector<int>& face) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> facets_;  // sorted, maximal, canonical order
};

// Order complex of P (or of its proper part when strip_bounds is set;
// then P must have a unique minimum and maximum).
SimplicialComplex order_complex(const FinitePoset& p, bool strip_bounds);

struct AntiIsoResult {
  bool ok = false;
  std::string witness;  // empty when ok
};

// Checks that f is a bijection P -> Q with x <= y in P iff f(y) <= f(x) in Q.
AntiIsoResult check_anti_isomorphism(
    const FinitePoset& p, const FinitePoset& q,
    const std::map<std::string, std::string>& f);

}  // namespace bkit
