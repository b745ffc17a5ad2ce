#pragma once

#include <optional>
#include <vector>

#include "flatfol/lattice.hpp"

namespace flatfol {

/// A finite, multiplicatively closed set of unimodular integer matrices with
/// identity at index 0, carrying full multiplication and inverse tables.
class MatrixGroup {
 public:
  /// Builds a group directly from a closed element list. `elements[0]` must
  /// be the identity; closure and invertibility are verified.
  static MatrixGroup from_elements(std::vector<IntMatrix> elements);

  Index dimension() const { return n_; }
  Index order() const { return static_cast<Index>(elements_.size()); }
  const IntMatrix& element(Index i) const { return elements_[static_cast<size_t>(i)]; }
  const std::vector<IntMatrix>& elements() const { return elements_; }

  Index multiply(Index i, Index j) const {
    return table_[static_cast<size_t>(i * order() + j)];
  }
  Index inverse(Index i) const { return inverse_[static_cast<size_t>(i)]; }

  /// Order of element i in the group.
  Index element_order(Index i) const;

  /// Index of a matrix in the element list, or nullopt.
  std::optional<Index> find(const IntMatrix& m) const;

 private:
  MatrixGroup() = default;
  Index n_ = 0;
  std::vector<IntMatrix> elements_;
  std::vector<Index> table_;    // order x order, row-major
  std::vector<Index> inverse_;  // order
};

/// Closure of the generated group, with full tables, provided its order does
/// not exceed `bound`.
///
/// Throws Error("NotUnimodular") if a generator has |det| != 1 and
/// Error("GroupNotFinite") when the closure exceeds the bound.
MatrixGroup close_group(const std::vector<IntMatrix>& generators,
                        Index bound = 100000);

/// True iff A * span(s) = span(s) for every element A. Requires s saturated.
bool is_invariant(const Sublattice& s, const MatrixGroup& g);

/// An invariant complementary L-subspace: the saturated kernel of the
/// group-averaged projection P = (1/|g|) sum_A A P0 A^{-1}, where P0 projects
/// onto span(s) along a unimodular basis completion.
///
/// Requires s saturated and invariant (throws Error("NotInvariant")).
Sublattice invariant_complement(const Sublattice& s, const MatrixGroup& g);

/// The averaged projection operator behind invariant_complement, exposed for
/// exact property checks (P*P = P, A*P = P*A, P fixes span(s) pointwise).
RatMatrix averaged_projection(const Sublattice& s, const MatrixGroup& g);

/// One factor of a direct-sum decomposition into invariant L-subspaces.
/// Minimality is certified only relative to the search bound used.
struct DecompositionFactor {
  Sublattice space;
  bool minimal_at_bound;
};

/// Decomposition of span(s0) into invariant L-subspaces, each admitting no
/// proper nonzero invariant L-subspace detectable at `norm_bound`. Requires
/// s0 saturated, nonzero, invariant.
std::vector<DecompositionFactor> minimal_decomposition(const Sublattice& s0,
                                                       const MatrixGroup& g,
                                                       long norm_bound = 3);

/// Saturated sublattice of vectors fixed by every element.
Sublattice fixed_subspace(const MatrixGroup& g);

/// A saturated invariant sublattice with 0 < rank < n, when the staged
/// search finds one: (1) the fixed subspace, (2) its invariant complement,
/// (3) saturated orbit spans of lattice vectors with sup-norm <= norm_bound,
/// enumerated deterministically. Absent is a legitimate outcome.
std::optional<Sublattice> find_proper_invariant_subspace(const MatrixGroup& g,
                                                         long norm_bound = 3);

/// The same staged search restricted to an invariant subspace s0: returned
/// subspaces are proper nonzero invariant subspaces of span(s0).
std::optional<Sublattice> find_proper_invariant_subspace_within(
    const Sublattice& s0, const MatrixGroup& g, long norm_bound = 3);

}  // namespace flatfol
