#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bkit/matroid.hpp"
#include "bkit/poset.hpp"
#include "bkit/rational.hpp"

namespace bkit {

// Sign vector over a ground set, entries in {+, -, 0}, packed as a pair of
// disjoint bitmasks.
struct SignVector {
  Mask plus = 0;
  Mask minus = 0;

  Mask support() const { return plus | minus; }
  Mask zero_set(int n) const { return full_mask(n) & ~support(); }
  int sign(int e) const {
    Mask bit = Mask(1) << e;
    return (plus & bit) ? 1 : (minus & bit) ? -1 : 0;
  }
  SignVector negated() const { return {minus, plus}; }

  // Composition: (x o y)_e = x_e if nonzero, else y_e.
  SignVector compose(const SignVector& y) const {
    Mask free = ~support();
    return {plus | (y.plus & free), minus | (y.minus & free)};
  }
  // Conformal below: every nonzero entry agrees with y.
  bool below(const SignVector& y) const {
    return (plus & ~y.plus) == 0 && (minus & ~y.minus) == 0;
  }

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(plus) << 32) | minus;
  }
  bool operator==(const SignVector&) const = default;
  bool operator<(const SignVector& o) const { return key() < o.key(); }

  std::string to_string(int n) const;  // e.g. "+-0+.."
  static SignVector from_string(const std::string& s);
};

class AffineExtension;

// A realizable oriented matroid: rational columns plus a reorientation set
// whose members have their signs flipped.  Enumeration is exact and pure;
// instances are immutable and safe to share across threads.
class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  static OrientedMatroid from_columns(const RatMat& columns,
                                      std::vector<std::string> labels,
                                      Mask reorientation = 0);

  const Matroid& underlying() const { return m_; }
  int n() const { return m_.n(); }
  int rank() const { return m_.rank(); }
  Mask reorientation() const { return reorient_; }
  const std::string& label(int i) const { return m_.label(i); }

  // Signed column of e (reorientation applied).
  RatVec signed_column(int e) const;

  // Sign vector of a linear functional evaluated against all columns.
  SignVector sign_vector_of(const RatVec& functional) const;

  // Two opposite cocircuits per corank-1 flat, canonically sorted.
  std::vector<SignVector> cocircuits() const;

  // Composition closure of cocircuits and zero.  Guard |E| <= 14.
  std::vector<SignVector> covectors() const;         // OpenMP wavefront
  std::vector<SignVector> covectors_serial() const;  // reference fixpoint

  std::vector<SignVector> topes() const;  // maximal covectors
  bool is_tope(const SignVector& t) const;

  bool is_acyclic() const;

  // Zero sets of positive covectors (entries in {+,0}); E is always
  // positive via the zero covector.
  std::vector<Mask> positive_flats() const;
  // Independent route: exact strict feasibility per flat.
  std::vector<Mask> positive_flats_feasibility() const;

  // Positive flats of reorient(*this, t), computed by conformality to t.
  std::vector<Mask> positive_flats_wrt(const SignVector& t) const;

  FinitePoset las_vergnas_lattice() const;  // requires acyclic

  OrientedMatroid reorient(const SignVector& tope) const;

  // Chirotope on an ordered basis (sequence of r distinct elements).
  int chirotope(const std::vector<int>& ordered_basis) const;

  // Deterministic seeded extension by a generic element.
  AffineExtension generic_extension(std::uint64_t seed) const;

  // True when g avoids the span of every non-spanning flat; violations are
  // reported through `violated`.
  bool is_generic_column(const RatVec& g, std::vector<Mask>* violated
                         = nullptr) const;

 private:
  Matroid m_;
  RatMat cols_;
  Mask reorient_ = 0;
};

// A generic single-element extension of a base oriented matroid, with the
// exact per-flat certificate that was verified during sampling.
class AffineExtension {
 public:
  AffineExtension(OrientedMatroid base, RatVec g_column, std::uint64_t seed,
                  std::vector<Mask> certified_flats);

  const OrientedMatroid& base() const { return base_; }
  const RatVec& g_column() const { return g_; }
  std::uint64_t seed() const { return seed_; }
  // Proper nonempty flats of the base whose span avoids g (all of them).
  const std::vector<Mask>& certified_flats() const { return certified_; }

  // Extension as an oriented matroid; g takes the last position.
  const OrientedMatroid& extended() const { return ext_; }
  Matroid extension_matroid() const { return ext_.underlying(); }

  // Topes of the base whose extension tope (T, g:+) has every nonzero
  // covector below it positive on g; returned with g deleted, deduplicated.
  std::vector<SignVector> bounded_topes() const;

 private:
  OrientedMatroid base_;
  RatVec g_;
  std::uint64_t seed_ = 0;
  std::vector<Mask> certified_;
  OrientedMatroid ext_;
};

}  // namespace bkit
