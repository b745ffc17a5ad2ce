#pragma once

#include <vector>

#include "flatfol/bieberbach.hpp"

namespace flatfol {

/// Multiplication table of an abstract finite group; index 0 is the
/// identity. products[a][b] is the index of a*b.
struct FiniteGroupTable {
  std::vector<std::vector<Index>> products;

  Index order() const { return static_cast<Index>(products.size()); }
  Index multiply(Index a, Index b) const {
    return products[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  Index inverse(Index a) const;

  /// Identity position, latin-square property, associativity.
  void validate() const;
  /// Contains the identity and is closed under products.
  void validate_subgroup(const std::vector<Index>& subgroup) const;
};

/// The n-dimensional generalized Klein bottle in the lattice basis
/// u0 = (1,...,1), u_j = e_{j+1} - e_1 of L = {v in Z^n : n | sum v}, with
/// its two distinguished invariant subspaces: the constants line and the
/// zero-average hyperplane.
struct KleinData {
  BieberbachGroup group;
  Sublattice v_const;
  Sublattice v_zeroavg;
};
KleinData klein_bottle(Index n);

/// The right-translation permutation representation of a finite group on
/// Z^H with the identity Gram, plus the two invariant subspaces attached to
/// a subgroup: functions constant on each left coset, and functions with
/// zero sum over each left coset.
struct RegularRepData {
  Ambient ambient;
  MatrixGroup hol;
  Sublattice coset_constants;
  Sublattice zero_coset_average;
};
RegularRepData regular_rep(const FiniteGroupTable& table,
                           const std::vector<Index>& subgroup);

/// The torus group Pi = L: trivial holonomy over a positive-definite Gram.
BieberbachGroup torus(RatMatrix gram);

}  // namespace flatfol
