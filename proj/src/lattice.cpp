#include "flatfol/lattice.hpp"

namespace flatfol {

Ambient::Ambient(Index n, RatMatrix gram) : n_(n), gram_(std::move(gram)) {
  if (n < 0) throw Error("BadDimension", "negative dimension");
  if (gram_.rows() != n || gram_.cols() != n)
    throw Error("Shape", "Gram matrix must be n x n");
  if (!exact_eq(gram_, gram_.transpose().eval()))
    throw Error("NotSymmetric", "Gram matrix must be symmetric");
  for (Index k = 1; k <= n; ++k) {
    RatMatrix minor = gram_.topLeftCorner(k, k);
    if (det_rat(minor) <= 0)
      throw Error("NotPositiveDefinite",
                  "Gram matrix must be positive definite");
  }
}

Sublattice Sublattice::span_of(Index n, const IntMatrix& columns) {
  if (columns.rows() != n && columns.cols() != 0)
    throw Error("Shape", "basis columns must have ambient dimension rows");
  IntMatrix cols = columns;
  if (cols.rows() != n) cols.resize(n, 0);
  IntMatrix h = hnf(cols).h;
  Index nonzero = 0;
  for (Index j = 0; j < h.cols(); ++j)
    if (!flatfol::is_zero(h.col(j))) ++nonzero;
  return Sublattice(n, h.leftCols(nonzero));
}

Sublattice Sublattice::zero(Index n) { return Sublattice(n, IntMatrix(n, 0)); }

Sublattice Sublattice::full(Index n) { return Sublattice(n, identity_int(n)); }

bool Sublattice::contains_lattice_point(const IntVector& v) const {
  return solve_integer(basis_, v).has_value();
}

bool Sublattice::span_contains(const RatVector& v) const {
  return solve_rational(to_rat(basis_), v).has_value();
}

Int FiniteAbelian::order() const {
  if (free_rank != 0) throw Error("InfiniteGroup", "order of an infinite group");
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

Sublattice saturate(const Sublattice& s) {
  const Index n = s.ambient_dimension();
  const Index k = s.rank();
  if (k == 0) return s;
  if (k == n) return Sublattice::full(n);
  // s = U^{-1} S V^{-1} with S = diag(d_1..d_k; 0): the rational span is
  // U^{-1} span(e_1..e_k), so Z^n cut with it is spanned by the first k
  // columns of U^{-1}.
  SnfResult f = snf(s.basis());
  IntMatrix uinv = inverse_unimodular(f.u);
  return Sublattice::span_of(n, uinv.leftCols(k));
}

bool is_direct_summand(const Sublattice& s) {
  SnfResult f = snf(s.basis());
  const Index k = std::min(f.s.rows(), f.s.cols());
  for (Index i = 0; i < k; ++i)
    if (f.s(i, i) != 0 && f.s(i, i) != 1) return false;
  return true;
}

Sublattice sum(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw Error("DimensionMismatch", "sum of sublattices of different ambients");
  const Index n = a.ambient_dimension();
  IntMatrix cat(n, a.rank() + b.rank());
  cat.leftCols(a.rank()) = a.basis();
  cat.rightCols(b.rank()) = b.basis();
  return saturate(Sublattice::span_of(n, cat));
}

Sublattice meet(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw Error("DimensionMismatch", "meet of sublattices of different ambients");
  const Index n = a.ambient_dimension();
  if (a.is_zero() || b.is_zero()) return Sublattice::zero(n);
  // x in span(A) meet span(B) iff x = A alpha = B beta: kernel of [A | -B].
  RatMatrix stacked(n, a.rank() + b.rank());
  stacked.leftCols(a.rank()) = to_rat(a.basis());
  stacked.rightCols(b.rank()) = -to_rat(b.basis());
  RatMatrix kern = kernel_rational(stacked);
  if (kern.cols() == 0) return Sublattice::zero(n);
  RatMatrix points = to_rat(a.basis()) * kern.topRows(a.rank());
  return saturate(Sublattice::span_of(n, clear_denominators(points)));
}

FiniteAbelian quotient_group(const Sublattice& sub, const Sublattice& super) {
  if (sub.ambient_dimension() != super.ambient_dimension())
    throw Error("DimensionMismatch", "quotient of different ambients");
  // Express sub's basis in super's: integral coordinates must exist.
  IntMatrix x(super.rank(), sub.rank());
  for (Index j = 0; j < sub.rank(); ++j) {
    auto c = solve_integer(super.basis(), sub.basis().col(j));
    if (!c)
      throw Error("NotContained",
                  "quotient requires the sublattice to be contained");
    x.col(j) = *c;
  }
  SnfResult f = snf(x);
  FiniteAbelian q;
  const Index k = std::min(f.s.rows(), f.s.cols());
  Index r = 0;
  for (Index i = 0; i < k; ++i)
    if (f.s(i, i) != 0) {
      ++r;
      if (f.s(i, i) > 1) q.invariant_factors.push_back(f.s(i, i));
    }
  q.free_rank = super.rank() - r;
  return q;
}

FiniteAbelian quotient_group(const Sublattice& sub) {
  return quotient_group(sub, Sublattice::full(sub.ambient_dimension()));
}

QuotientLattice quotient_lattice(const Sublattice& s) {
  if (saturate(s) != s)
    throw Error("NotSaturated", "quotient_lattice requires a saturated input");
  const Index n = s.ambient_dimension();
  const Index k = s.rank();
  SnfResult f = snf(s.basis());
  IntMatrix uinv = inverse_unimodular(f.u);
  // Columns of U^{-1}: first k span s (saturated), the rest complete a
  // Z-basis of Z^n and project to a Z-basis of the quotient. The last n-k
  // rows of U are the corresponding coordinate projection.
  QuotientLattice q;
  q.lifts = uinv.rightCols(n - k);
  q.projection = to_rat(IntMatrix(f.u.bottomRows(n - k)));
  return q;
}

Sublattice orthogonal_complement(const Sublattice& s, const Ambient& amb) {
  if (s.ambient_dimension() != amb.dimension())
    throw Error("DimensionMismatch", "complement in a different ambient");
  if (saturate(s) != s)
    throw Error("NotSaturated", "orthogonal_complement requires saturation");
  const Index n = amb.dimension();
  if (s.is_zero()) return Sublattice::full(n);
  RatMatrix normal_system = to_rat(s.basis()).transpose() * amb.gram();
  RatMatrix kern = kernel_rational(normal_system);
  if (kern.cols() == 0) return Sublattice::zero(n);
  return saturate(Sublattice::span_of(n, clear_denominators(kern)));
}

}  // namespace flatfol
