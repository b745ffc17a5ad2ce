#include "flatfol/invariant.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace flatfol {

namespace {

std::vector<Int> matrix_key(const IntMatrix& m) {
  std::vector<Int> key;
  key.reserve(static_cast<size_t>(m.size()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) key.push_back(m(i, j));
  return key;
}

}  // namespace

MatrixGroup MatrixGroup::from_elements(std::vector<IntMatrix> elements) {
  if (elements.empty()) throw Error("EmptyGroup", "a group needs an identity");
  MatrixGroup g;
  g.n_ = elements[0].rows();
  if (!exact_eq(elements[0], identity_int(g.n_)))
    throw Error("BadIdentity", "element 0 must be the identity");
  std::map<std::vector<Int>, Index> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    const IntMatrix& m = elements[i];
    if (m.rows() != g.n_ || m.cols() != g.n_)
      throw Error("Shape", "group elements must share one square size");
    Int d = det_int(m);
    if (d != 1 && d != -1)
      throw Error("NotUnimodular", "group element with |det| != 1");
    if (!index.emplace(matrix_key(m), static_cast<Index>(i)).second)
      throw Error("DuplicateElement", "group elements must be distinct");
  }
  const Index order = static_cast<Index>(elements.size());
  g.elements_ = std::move(elements);
  g.table_.assign(static_cast<size_t>(order * order), -1);
  g.inverse_.assign(static_cast<size_t>(order), -1);
  for (Index i = 0; i < order; ++i)
    for (Index j = 0; j < order; ++j) {
      IntMatrix p = g.elements_[static_cast<size_t>(i)] *
                    g.elements_[static_cast<size_t>(j)];
      auto it = index.find(matrix_key(p));
      if (it == index.end())
        throw Error("NotClosed", "element set is not closed under products");
      g.table_[static_cast<size_t>(i * order + j)] = it->second;
      if (it->second == 0) g.inverse_[static_cast<size_t>(i)] = j;
    }
  return g;
}

Index MatrixGroup::element_order(Index i) const {
  Index k = i;
  Index ord = 1;
  while (k != 0) {
    k = multiply(k, i);
    ++ord;
  }
  return ord;
}

std::optional<Index> MatrixGroup::find(const IntMatrix& m) const {
  for (Index i = 0; i < order(); ++i)
    if (exact_eq(elements_[static_cast<size_t>(i)], m)) return i;
  return std::nullopt;
}

MatrixGroup close_group(const std::vector<IntMatrix>& generators, Index bound) {
  if (generators.empty())
    throw Error("EmptyGenerators", "close_group needs at least one generator");
  const Index n = generators[0].rows();
  for (const IntMatrix& m : generators) {
    if (m.rows() != n || m.cols() != n)
      throw Error("Shape", "generators must share one square size");
    Int d = det_int(m);
    if (d != 1 && d != -1)
      throw Error("NotUnimodular", "generator with |det| != 1");
  }
  std::vector<IntMatrix> elements;
  std::map<std::vector<Int>, Index> index;
  auto add = [&](const IntMatrix& m) -> bool {
    if (index.count(matrix_key(m))) return false;
    if (static_cast<Index>(elements.size()) >= bound)
      throw Error("GroupNotFinite",
                  "group closure exceeded the bound of " + std::to_string(bound));
    index.emplace(matrix_key(m), static_cast<Index>(elements.size()));
    elements.push_back(m);
    return true;
  };
  add(identity_int(n));
  for (const IntMatrix& m : generators) add(m);
  for (size_t i = 0; i < elements.size(); ++i)
    for (const IntMatrix& gen : generators) add(IntMatrix(elements[i] * gen));
  return MatrixGroup::from_elements(std::move(elements));
}

bool is_invariant(const Sublattice& s, const MatrixGroup& g) {
  if (s.ambient_dimension() != g.dimension())
    throw Error("DimensionMismatch", "subspace and group dimensions differ");
  if (s.is_zero() || s.is_full()) return true;
  // Rows of q are the linear forms vanishing on span(s): invariance of A is
  // q * A * basis = 0.
  RatMatrix q = kernel_rational(to_rat(s.basis()).transpose()).transpose();
  RatMatrix b = to_rat(s.basis());
  for (const IntMatrix& a : g.elements())
    if (!is_zero(q * to_rat(a) * b)) return false;
  return true;
}

RatMatrix averaged_projection(const Sublattice& s, const MatrixGroup& g) {
  const Index n = g.dimension();
  const Index k = s.rank();
  // P0 projects onto span(s) along the span of the basis completion; both
  // factors of W E W^{-1} are integral since W is unimodular.
  IntMatrix w(n, n);
  if (k > 0) w.leftCols(k) = s.basis();
  if (k < n) w.rightCols(n - k) = quotient_lattice(s).lifts;
  IntMatrix e(n, n);
  e.setZero();
  for (Index i = 0; i < k; ++i) e(i, i) = 1;
  IntMatrix p0 = w * e * inverse_unimodular(w);
  IntMatrix acc(n, n);
  acc.setZero();
  for (Index i = 0; i < g.order(); ++i)
    acc += g.element(i) * p0 * g.element(g.inverse(i));
  return to_rat(acc) * rat(1, static_cast<long>(g.order()));
}

Sublattice invariant_complement(const Sublattice& s, const MatrixGroup& g) {
  if (!is_invariant(s, g))
    throw Error("NotInvariant", "subspace is not invariant under the group");
  if (saturate(s) != s)
    throw Error("NotSaturated", "invariant_complement requires saturation");
  const Index n = g.dimension();
  if (s.is_full()) return Sublattice::zero(n);
  if (s.is_zero()) return Sublattice::full(n);
  RatMatrix p = averaged_projection(s, g);
  RatMatrix kern = kernel_rational(p);
  return saturate(Sublattice::span_of(n, clear_denominators(kern)));
}

Sublattice fixed_subspace(const MatrixGroup& g) {
  const Index n = g.dimension();
  RatMatrix stacked(n * (g.order() - 1), n);
  Index row = 0;
  for (Index i = 1; i < g.order(); ++i) {
    stacked.middleRows(row, n) = to_rat(IntMatrix(g.element(i) - identity_int(n)));
    row += n;
  }
  if (row == 0) return Sublattice::full(n);
  RatMatrix kern = kernel_rational(stacked);
  if (kern.cols() == 0) return Sublattice::zero(n);
  return saturate(Sublattice::span_of(n, clear_denominators(kern)));
}

namespace {

// Coefficient-vector enumeration for the orbit-span stage: shells of
// increasing sup-norm; within a shell ordered by first nonzero index, with
// positive leading entry, remaining coordinates in zigzag order
// 0 < 1 < -1 < 2 < -2 < ...  The first candidate overall is e1. Only one of
// +-c is visited since both span the same orbit.
long zig(long rank) {
  if (rank == 0) return 0;
  long mag = (rank + 1) / 2;
  return (rank % 2 == 1) ? mag : -mag;
}

template <typename Fn>
bool visit_tail(std::vector<long>& c, size_t pos, long m, Fn& visit) {
  if (pos == c.size()) {
    long sup = 0;
    for (long x : c) sup = std::max(sup, std::abs(x));
    return sup == m && visit(c);
  }
  for (long r = 0; r <= 2 * m; ++r) {
    c[pos] = zig(r);
    if (visit_tail(c, pos + 1, m, visit)) return true;
  }
  return false;
}

// Visits coefficient vectors in the deterministic search order until the
// visitor returns true; returns whether any visit succeeded.
template <typename Fn>
bool enumerate_coefficients(Index dim, long bound, Fn visit) {
  for (long m = 1; m <= bound; ++m)
    for (Index lead = 0; lead < dim; ++lead)
      for (long first = 1; first <= m; ++first) {
        std::vector<long> c(static_cast<size_t>(dim), 0);
        c[static_cast<size_t>(lead)] = first;
        if (visit_tail(c, static_cast<size_t>(lead) + 1, m, visit)) return true;
      }
  return false;
}

}  // namespace

std::optional<Sublattice> find_proper_invariant_subspace_within(
    const Sublattice& s0, const MatrixGroup& g, long norm_bound) {
  const Index n = g.dimension();
  const Index r0 = s0.rank();
  if (r0 <= 1) return std::nullopt;

  // Stage 1: the fixed subspace, cut down to s0.
  Sublattice fix = meet(fixed_subspace(g), s0);
  if (fix.rank() > 0 && fix.rank() < r0) return fix;
  if (fix.rank() == r0) {
    // s0 is pointwise fixed: every line in it is invariant; the orbit-span
    // stage would return the first basis line, so return it directly.
    return saturate(Sublattice::span_of(n, s0.basis().leftCols(1)));
  }

  // Stage 2: the invariant complement of the fixed subspace, cut down.
  if (fix.rank() > 0) {
    Sublattice comp = meet(invariant_complement(fix, g), s0);
    if (comp.rank() > 0 && comp.rank() < r0) return comp;
  }

  // Stage 3: saturated orbit spans of lattice vectors of s0 with bounded
  // coefficient sup-norm.
  std::optional<Sublattice> found;
  enumerate_coefficients(r0, norm_bound, [&](const std::vector<long>& c) {
    IntVector v(n);
    v.setZero();
    for (Index j = 0; j < r0; ++j)
      v += (Int(c[static_cast<size_t>(j)]) * s0.basis().col(j)).eval();
    IntMatrix orbit(n, g.order());
    for (Index i = 0; i < g.order(); ++i) orbit.col(i) = g.element(i) * v;
    Sublattice span = saturate(Sublattice::span_of(n, orbit));
    if (span.rank() < r0) {
      found = span;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<Sublattice> find_proper_invariant_subspace(const MatrixGroup& g,
                                                         long norm_bound) {
  return find_proper_invariant_subspace_within(
      Sublattice::full(g.dimension()), g, norm_bound);
}

std::vector<DecompositionFactor> minimal_decomposition(const Sublattice& s0,
                                                       const MatrixGroup& g,
                                                       long norm_bound) {
  if (s0.is_zero())
    throw Error("ZeroSubspace", "cannot decompose the zero subspace");
  if (saturate(s0) != s0)
    throw Error("NotSaturated", "minimal_decomposition requires saturation");
  if (!is_invariant(s0, g))
    throw Error("NotInvariant", "subspace is not invariant under the group");
  auto inner = find_proper_invariant_subspace_within(s0, g, norm_bound);
  if (!inner) return {{s0, true}};
  // Split by the found subspace; complement it inside s0 via the averaging
  // construction, as in the inductive proof.
  Sublattice rest = meet(invariant_complement(*inner, g), s0);
  std::vector<DecompositionFactor> out = minimal_decomposition(*inner, g, norm_bound);
  std::vector<DecompositionFactor> tail = minimal_decomposition(rest, g, norm_bound);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace flatfol
