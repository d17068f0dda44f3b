#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bkit/poset.hpp"
#include "bkit/rational.hpp"
#include "bkit/util.hpp"

namespace bkit {

// Exact matroid with a memoized rank oracle.  Provenance is one of: rational
// matrix columns, an explicit circuit list, or a restriction/contraction or
// direct-sum derivation.  Values are immutable; the internal caches are
// synchronized, so shared read access across threads is safe.
class Matroid {
 public:
  Matroid() = default;

  // Rank oracle = exact rational Gaussian elimination on the chosen columns;
  // zero columns are loops.  Labels must be distinct and match the column
  // count; all columns must have the same dimension.
  static Matroid from_rational_matrix(const RatMat& columns,
                                      std::vector<std::string> labels);

  // Rank by brute-force independence testing against the given complete
  // circuit list.  Guarded to |E| <= 10.
  static Matroid from_circuits(std::vector<std::string> labels,
                               const std::vector<std::vector<std::string>>&
                                   circuits);

  // Wraps a rank function directly (derivation-tree provenance); the
  // function must satisfy the rank axioms.
  static Matroid from_rank_function(std::vector<std::string> labels,
                                    std::function<int(Mask)> rank);

  int n() const;
  const std::vector<std::string>& labels() const;
  const std::string& label(int i) const;
  int position(const std::string& label) const;  // -1 when absent
  Mask ground() const { return full_mask(n()); }

  int rank(Mask s) const;
  int rank() const { return rank(ground()); }

  Mask closure(Mask s) const;
  bool is_flat(Mask s) const { return closure(s) == s; }
  bool is_independent(Mask s) const { return rank(s) == popcount(s); }
  bool is_basis(Mask s) const {
    return is_independent(s) && rank(s) == rank();
  }
  Mask loops() const;

  // All flats, canonically ordered (by size, then mask).  Guard |E| <= 20.
  const std::vector<Mask>& flats() const;
  FinitePoset flats_lattice() const;

  // Connected components of the restriction to `within` (common-circuit
  // equivalence; loops are singleton components).
  std::vector<Mask> connected_components(Mask within) const;
  std::vector<Mask> connected_components() const {
    return connected_components(ground());
  }
  bool is_connected(Mask within) const {
    return connected_components(within).size() == 1;
  }

  // Ground set restrict_to minus contract; rank(S) = r(S u contract) -
  // r(contract).  Requires contract subset of restrict_to.
  Matroid minor(Mask restrict_to, Mask contract) const;

  // Requires pairwise disjoint label sets.
  static Matroid direct_sum(const std::vector<Matroid>& parts);

  long long mu() const;    // Mobius from bottom to top of the flat lattice
  long long beta() const;  // (-1)^r sum over flats of mu(X) r(X)

  // The unique circuit inside B u {e}; B must be a basis, e outside B.
  Mask basic_circuit(Mask basis, int e) const;

  struct CircuitousResult {
    bool ok = true;
    Mask witness_flat = 0;  // a connected flat with no spanning basic circuit
    // For each qualifying connected flat, an element whose basic circuit
    // spans it (parallel to `flats_checked`).
    std::vector<Mask> flats_checked;
    std::vector<int> spanning_element;
  };
  // True iff every connected flat of rank >= 2 spanned by a subset of B is
  // spanned by some basic circuit C(B, e).
  CircuitousResult is_circuitous(Mask basis) const;

  // All circuits (minimal dependent sets); exponential scan, for small E.
  std::vector<Mask> circuits() const;

  std::string set_string(Mask s) const { return bkit::set_string(s, labels()); }
  Mask mask_of(const std::vector<std::string>& labs) const;

  // Rank of every subset, indexed by mask; the canonical equality key.
  std::vector<std::uint8_t> rank_table() const;

  bool has_matrix() const;
  const RatMat& matrix() const;  // requires matrix provenance

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  explicit Matroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

// Rank functions compared pointwise across the shared labeled ground set
// (label sets must coincide; order may differ).
bool same_rank_function(const Matroid& a, const Matroid& b);

// Feichtner-Sturmfels connectivity criterion: for every pair of flats
// F < G with G connected, the minor (M|G)/F is connected.
bool fs_criterion(const Matroid& m);

}  // namespace bkit
