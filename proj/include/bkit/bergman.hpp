#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bkit/matroid.hpp"
#include "bkit/oriented.hpp"
#include "bkit/poset.hpp"

namespace bkit {

// A strictly increasing chain of proper nonempty flats; the empty chain is
// the trivial flag.  The bottom (empty set) and top (ground set) of the
// chain are implicit.
struct FlagOfFlats {
  std::vector<Mask> chain;

  int length() const { return static_cast<int>(chain.size()); }
  bool operator==(const FlagOfFlats&) const = default;
  bool operator<(const FlagOfFlats& o) const { return chain < o.chain; }
  bool subchain_of(const FlagOfFlats& o) const;
};

// Level sets of a weight vector, ordered by increasing weight; invariant
// under translation and positive scaling.  Members are subsets, not
// necessarily flats.
FlagOfFlats flag_of_weight(const std::vector<Rat>& weights);

bool is_valid_flag(const Matroid& m, const std::vector<Mask>& chain);

// Loops of the chain matroid (direct sum of interval minors), computable
// for any strictly increasing chain of subsets.
Mask chain_matroid_loops(const Matroid& m, const std::vector<Mask>& chain);

// The direct sum of interval minors F_i / F_{i-1}, presented on the
// original ground set of m.  Requires a valid flag.
Matroid matroid_of_flag(const Matroid& m, const FlagOfFlats& flag);

// The same matroid with the inherited orientation, realized block-diagonally
// from reduced columns; requires matrix provenance on om.
OrientedMatroid oriented_matroid_of_flag(const OrientedMatroid& om,
                                         const FlagOfFlats& flag);

// Inclusion forest of the connected components of all members of the flag
// (the ground set's components label the roots).
struct LabeledForest {
  std::vector<Mask> labels;  // sorted by size, then mask
  std::vector<int> parent;   // index into labels, -1 at roots

  bool operator==(const LabeledForest&) const = default;
  std::set<Mask> label_set() const {
    return {labels.begin(), labels.end()};
  }
};
LabeledForest forest_of_flag(const Matroid& m, const FlagOfFlats& flag);

// All valid flags, canonically ordered; the trivial flag comes first.
std::vector<FlagOfFlats> all_flags(const Matroid& m);
// Valid flags all of whose members belong to `allowed`.
std::vector<FlagOfFlats> flags_within(const Matroid& m,
                                      const std::vector<Mask>& allowed);

// Fine subdivision: the order complex of the proper part of the flat
// lattice (vertices = proper nonempty flats, faces = flags).
SimplicialComplex bergman_fine(const Matroid& m);

// One equivalence class of flags under equality of the flag matroid.
struct CoarseCell {
  std::vector<FlagOfFlats> flags;        // canonical order
  std::vector<std::uint8_t> key;         // rank table of the flag matroid
  std::set<std::set<Mask>> forests;      // distinct member label sets
  int dim = -1;                          // max flag length - 1

  const FlagOfFlats& representative() const { return flags.front(); }
  std::string id(const std::vector<std::string>& labels) const;
};

class CoarseComplex {
 public:
  std::vector<std::string> ground_labels;
  std::vector<CoarseCell> cells;            // canonical order
  std::vector<std::vector<char>> leq;       // subchain-closure order

  int size() const { return static_cast<int>(cells.size()); }
  int cell_of_flag(const FlagOfFlats& f) const;  // -1 when absent
  int cell_of_key(const std::vector<std::uint8_t>& key) const;

  // Cells by dimension, the trivial cell (dim -1) excluded.
  std::vector<long long> f_vector() const;
  long long euler_characteristic() const;

  FinitePoset poset() const;

 private:
  mutable std::map<std::vector<Mask>, int> flag_index_;
  mutable std::map<std::vector<std::uint8_t>, int> key_index_;
  void build_indices() const;
};

// Coarse subdivision: flags grouped by exact rank-function equality of
// their flag matroids, ordered by subchain containment (transitively
// closed).  The OpenMP path and the serial reference must agree.
CoarseComplex bergman_coarse(const Matroid& m);
CoarseComplex bergman_coarse_serial(const Matroid& m);

struct PositiveBergman {
  std::vector<Mask> positive_flats;
  SimplicialComplex fine;   // chains of proper nonempty positive flats
  CoarseComplex coarse;     // cells of flags of positive flats
};
PositiveBergman positive_bergman(const OrientedMatroid& om);

// Tubing of the Coxeter diagram read off a flag of positive flats: one tube
// per connected component of each proper member.  simple_positions[s] is
// the ground position of the simple root of node s.  Throws on a
// non-positive member.
std::set<Mask> psi(const Matroid& m, const std::vector<int>& simple_positions,
                   const std::vector<Mask>& positive_flats,
                   const FlagOfFlats& flag);

struct CoverReport {
  bool covered = false;
  std::optional<FlagOfFlats> witness;  // an uncovered flag when !covered
};

// True iff every valid flag consists of flats positive with respect to at
// least one listed tope.  Positivity is conformality: the flat is the zero
// set of a covector below the tope.
CoverReport covers(const OrientedMatroid& om,
                   const std::vector<SignVector>& topes);
CoverReport covers_serial(const OrientedMatroid& om,
                          const std::vector<SignVector>& topes);

using Perm = std::vector<int>;  // ground-set permutation, position image

bool is_matroid_automorphism(const Matroid& m, const Perm& p);
std::vector<Perm> generate_group(const std::vector<Perm>& gens,
                                 size_t guard = 1000000);

struct TevelevReport {
  bool ok = false;
  std::string witness;          // failing cell description when !ok
  size_t group_order = 0;
  size_t cell_count = 0;
  size_t positive_cell_count = 0;
};

// Every coarse cell of the full complex must be mapped into a positive
// coarse cell by some element of the group generated by the given
// automorphisms; each permutation is verified to act cellularly.
TevelevReport tevelev_check(const OrientedMatroid& om,
                            const std::vector<Perm>& group_perms);

}  // namespace bkit
