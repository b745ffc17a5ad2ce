#pragma once

#include <optional>
#include <vector>

#include "flatfol/invariant.hpp"
#include "flatfol/lattice.hpp"

namespace flatfol {

/// Translational parts mod Z^n, one canonical representative in [0,1)^n per
/// holonomy element, indexed like the MatrixGroup. Entry 0 (identity) is 0.
class VectorSystem {
 public:
  explicit VectorSystem(std::vector<RatVector> reps) : reps_(std::move(reps)) {}
  const RatVector& operator[](Index i) const { return reps_[static_cast<size_t>(i)]; }
  Index size() const { return static_cast<Index>(reps_.size()); }

 private:
  std::vector<RatVector> reps_;
};

/// An affine element (a, lambda): x -> A_a x + b(a) + lambda.
struct AffineElement {
  Index a;
  IntVector lattice_part;
};

/// A Bieberbach group in lattice coordinates: L = Z^n with a rational Gram
/// matrix, a finite holonomy group of unimodular isometries, and a vector
/// system subject to the cocycle condition. Torsion-freeness is enforced at
/// construction.
class BieberbachGroup {
 public:
  const Ambient& ambient() const { return amb_; }
  Index dimension() const { return amb_.dimension(); }
  const MatrixGroup& holonomy() const { return hol_; }
  const VectorSystem& vector_system() const { return vsys_; }

  AffineElement identity() const;
  AffineElement compose(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;

  friend BieberbachGroup build(RatMatrix gram,
                               const std::vector<IntMatrix>& point_generators,
                               const std::vector<RatVector>& translation_generators,
                               Index bound);

 private:
  BieberbachGroup(Ambient amb, MatrixGroup hol, VectorSystem vsys)
      : amb_(std::move(amb)), hol_(std::move(hol)), vsys_(std::move(vsys)) {}
  Ambient amb_;
  MatrixGroup hol_;
  VectorSystem vsys_;
};

/// Closes the point group, propagates the vector system along the
/// multiplication table, canonicalizes representatives into [0,1)^n, and
/// validates everything.
///
/// Throws: NotUnimodular, GroupNotFinite, NotIsometric,
/// InconsistentVectorSystem, HasTorsion.
BieberbachGroup build(RatMatrix gram,
                      const std::vector<IntMatrix>& point_generators,
                      const std::vector<RatVector>& translation_generators,
                      Index bound = 100000);

/// The Diophantine torsion criterion: some element (A, b(A)+lambda) with
/// A != I has finite order iff N_A lambda = -N_A b(A) is integrally solvable
/// for N_A = I + A + ... + A^{m-1}, m the order of A.
///
/// Exposed separately so candidate data can be tested without building;
/// build() enforces it.
bool is_torsion_free(const MatrixGroup& hol, const VectorSystem& vsys);
inline bool is_torsion_free(const BieberbachGroup& g) {
  return is_torsion_free(g.holonomy(), g.vector_system());
}

/// True iff every holonomy element has determinant 1.
bool is_orientable(const BieberbachGroup& g);

/// The affine action of an element on a point.
RatVector act(const AffineElement& e, const RatVector& x,
              const BieberbachGroup& g);

/// A witness gamma with gamma(x) = y, when x and y are in one orbit.
std::optional<AffineElement> same_orbit(const RatVector& x, const RatVector& y,
                                        const BieberbachGroup& g);

/// Block-diagonal direct product (Riemannian product of the quotients).
BieberbachGroup direct_product(const BieberbachGroup& g1,
                               const BieberbachGroup& g2);

}  // namespace flatfol
