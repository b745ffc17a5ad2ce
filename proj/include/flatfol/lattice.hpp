#pragma once

#include <vector>

#include "flatfol/exactlin.hpp"
#include "flatfol/numeric.hpp"

namespace flatfol {

/// The ambient lattice Z^n together with a rational inner product on its
/// basis. Validated symmetric positive definite on construction.
class Ambient {
 public:
  Ambient(Index n, RatMatrix gram);
  static Ambient standard(Index n) { return Ambient(n, identity_rat(n)); }

  Index dimension() const { return n_; }
  const RatMatrix& gram() const { return gram_; }

 private:
  Index n_;
  RatMatrix gram_;
};

/// A sublattice of Z^n held by a full-column-rank basis in canonical
/// column-HNF. Rank 0 encodes the zero subspace (an n x 0 basis). Saturated
/// instances double as L-subspaces: the rational span determines and is
/// determined by the lattice.
class Sublattice {
 public:
  /// Canonicalizes arbitrary spanning columns: HNF, zero columns dropped.
  static Sublattice span_of(Index ambient_dimension, const IntMatrix& columns);
  static Sublattice zero(Index ambient_dimension);
  static Sublattice full(Index ambient_dimension);

  Index ambient_dimension() const { return n_; }
  Index rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool is_zero() const { return rank() == 0; }
  bool is_full() const { return rank() == n_; }

  /// Integer-combination membership (lattice membership, not span).
  bool contains_lattice_point(const IntVector& v) const;
  /// Rational span membership.
  bool span_contains(const RatVector& v) const;

  /// Canonical bases make equality representation equality.
  bool operator==(const Sublattice& o) const {
    return n_ == o.n_ && exact_eq(basis_, o.basis_);
  }
  bool operator!=(const Sublattice& o) const { return !(*this == o); }

 private:
  Sublattice(Index n, IntMatrix basis) : n_(n), basis_(std::move(basis)) {}
  Index n_;
  IntMatrix basis_;  // n x k, canonical column HNF
};

/// Finitely generated abelian group in invariant-factor form: factors are
/// the invariant divisors > 1 in divisibility order, plus a free rank.
struct FiniteAbelian {
  std::vector<Int> invariant_factors;
  Index free_rank = 0;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  /// Order of the group; requires free_rank == 0.
  Int order() const;
  bool operator==(const FiniteAbelian& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
};

/// Smallest direct-summand sublattice with the same rational span
/// (L intersect span_Q of s). Idempotent.
Sublattice saturate(const Sublattice& s);

/// True iff Z^n / s is torsion-free, i.e. every nonzero invariant factor of
/// the basis is 1.
bool is_direct_summand(const Sublattice& s);

/// The L-subspace spanned by both arguments: saturation of the concatenated
/// span.
Sublattice sum(const Sublattice& a, const Sublattice& b);

/// Saturated sublattice of the intersection of the two rational spans.
Sublattice meet(const Sublattice& a, const Sublattice& b);

/// Invariant factors of super/sub; requires sub's lattice contained in
/// super's. The ambient overload quotients Z^n itself.
FiniteAbelian quotient_group(const Sublattice& sub, const Sublattice& super);
FiniteAbelian quotient_group(const Sublattice& sub);

/// A Z-basis of Z^n / s by lifts, plus the projection onto quotient
/// coordinates. Requires s saturated.
///
/// `lifts` is n x (n-k) integer; `projection` is (n-k) x n integer with
/// projection * lifts = I and kernel exactly span(s); represented rational
/// for direct use on rational points.
struct QuotientLattice {
  IntMatrix lifts;
  RatMatrix projection;
};
QuotientLattice quotient_lattice(const Sublattice& s);

/// Saturated sublattice spanning {x : basis^T * gram * x = 0}. Requires s
/// saturated; ranks add up to n.
Sublattice orthogonal_complement(const Sublattice& s, const Ambient& amb);

}  // namespace flatfol
