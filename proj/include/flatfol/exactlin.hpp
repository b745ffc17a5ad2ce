#pragma once

#include <optional>

#include "flatfol/numeric.hpp"

namespace flatfol {

/// Column-style Hermite normal form: h = m * u with u unimodular.
///
/// Canonical form used for sublattice equality everywhere in the library:
/// zero columns last, pivots (topmost nonzero entry of each column) strictly
/// descending by row as the column index grows, pivots positive, and each
/// pivot row reduced into [0, pivot) in the earlier columns.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

/// Smith normal form: s = u * m * v with u, v unimodular, s diagonal with
/// d_1 | d_2 | ... and every d_i >= 0 (zeros last).
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  Index rank() const;
};
SnfResult snf(const IntMatrix& m);

/// Some x with a*x = b over the integers, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Basis of {x : a*x = 0} over Q. Columns are primitive integer vectors with
/// positive leading entry (deterministic canonical output); an n x 0 matrix
/// encodes the zero kernel.
RatMatrix kernel_rational(const RatMatrix& a);

/// Some rational x with a*x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// Exact inverse; throws Error("Singular") when not invertible.
RatMatrix inverse_rational(const RatMatrix& a);

/// Integer inverse of a unimodular matrix; throws when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& u);

Index rank_rational(const RatMatrix& a);

}  // namespace flatfol
