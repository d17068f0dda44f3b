#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bkit/util.hpp"

namespace bkit {

// Exact rational arithmetic is delegated to GMP; mpq_class values are kept
// canonicalized (reduced, positive denominator) by construction.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
// A matrix stored as a list of columns of equal length.
using RatMat = std::vector<RatVec>;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

inline int sign_of(const Rat& q) { return sgn(q); }

// Rank of the subspace spanned by the given columns.
int rat_rank(const std::vector<const RatVec*>& cols);
int rat_rank(const RatMat& cols);

// Coefficients expressing `target` in the given basis columns, if any.
std::optional<RatVec> in_span(const std::vector<const RatVec*>& basis,
                              const RatVec& target);

// Basis of { f : row . f = 0 for every row }.
std::vector<RatVec> nullspace_of_rows(const std::vector<RatVec>& rows);

// Exact Fourier-Motzkin feasibility of the homogeneous strict system
// { y : row . y > 0 for every row }.
bool strict_feasible(std::vector<RatVec> rows);

}  // namespace bkit
