#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "flatfol/invariant.hpp"
#include "helpers.hpp"

using namespace flatfol;
using namespace flatfol::testing;

namespace {

IntMatrix cyclic_shift(Index n) {
  IntMatrix c(n, n);
  c.setZero();
  for (Index i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
  return c;
}

Sublattice spann(Index n, std::initializer_list<std::initializer_list<long>> cols) {
  IntMatrix m(n, static_cast<Index>(cols.size()));
  Index j = 0;
  for (const auto& c : cols) {
    Index i = 0;
    for (long x : c) m(i++, j) = x;
    ++j;
  }
  return Sublattice::span_of(n, m);
}

MatrixGroup trivial_group(Index n) { return close_group({identity_int(n)}); }

}  // namespace

TEST_CASE("close_group frozen examples") {
  MatrixGroup swap2 = close_group({int_matrix({{0, 1}, {1, 0}})});
  CHECK(swap2.order() == 2);

  // Cyclic coordinate shift in dimension 3 generates a group of order 3.
  MatrixGroup c3 = close_group({cyclic_shift(3)});
  CHECK(c3.order() == 3);

  CHECK_THROWS_AS(close_group({int_matrix({{1, 1}, {0, 1}})}, 512), Error);
  CHECK_THROWS_AS(close_group({int_matrix({{2, 0}, {0, 1}})}), Error);
}

TEST_CASE("group tables are consistent") {
  MatrixGroup g = close_group({cyclic_shift(4), int_matrix({{0, 1, 0, 0},
                                                            {1, 0, 0, 0},
                                                            {0, 0, 1, 0},
                                                            {0, 0, 0, 1}})});
  CHECK(g.order() == 24);  // all coordinate permutations of Z^4
  for (Index i = 0; i < g.order(); ++i) {
    CHECK(g.multiply(i, g.inverse(i)) == 0);
    CHECK(g.multiply(0, i) == i);
    for (Index j = 0; j < g.order(); ++j) {
      IntMatrix p = g.element(i) * g.element(j);
      CHECK(exact_eq(p, g.element(g.multiply(i, j))));
    }
  }
}

TEST_CASE("is_invariant frozen examples") {
  MatrixGroup swap2 = close_group({int_matrix({{0, 1}, {1, 0}})});
  CHECK(is_invariant(Sublattice::zero(2), swap2));
  CHECK(!is_invariant(spann(2, {{1, 0}}), swap2));
  // The constants line is invariant under any permutation group.
  CHECK(is_invariant(spann(2, {{1, 1}}), swap2));
  MatrixGroup c5 = close_group({cyclic_shift(5)});
  CHECK(is_invariant(spann(5, {{1, 1, 1, 1, 1}}), c5));
}

TEST_CASE("invariant_complement frozen examples") {
  // Full space complements to zero.
  MatrixGroup swap2 = close_group({int_matrix({{0, 1}, {1, 0}})});
  CHECK(invariant_complement(Sublattice::full(2), swap2) == Sublattice::zero(2));

  // Klein bottle n=2 in lattice coordinates: H = {I, diag(1,-1)}, the
  // constants line span(e1) complements to span(e2).
  MatrixGroup klein = close_group({int_matrix({{1, 0}, {0, -1}})});
  CHECK(invariant_complement(spann(2, {{1, 0}}), klein) == spann(2, {{0, 1}}));

  CHECK_THROWS_AS(invariant_complement(spann(2, {{1, 0}}), swap2), Error);
}

TEST_CASE("invariant_complement on the regular representation") {
  // Regular representation of Z_4 via the cyclic shift; subgroup {0,2} of
  // order d=2 gives the coset-constant subspace of dimension n/d = 2.
  MatrixGroup c4 = close_group({cyclic_shift(4)});
  Sublattice coset_constants = spann(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  REQUIRE(is_invariant(coset_constants, c4));
  Sublattice comp = invariant_complement(coset_constants, c4);
  CHECK(comp.rank() == 2);  // n - n/d
  CHECK(is_invariant(comp, c4));
  CHECK(meet(comp, coset_constants) == Sublattice::zero(4));
  CHECK(sum(comp, coset_constants) == Sublattice::full(4));
}

TEST_CASE("averaged projection is an exact invariant projection") {
  std::mt19937_64 rng(2718);
  // Signed permutation groups on small dimensions with random invariant
  // subspaces obtained as orbit spans.
  for (int trial = 0; trial < 40; ++trial) {
    Index n = 2 + static_cast<Index>(rng() % 3);
    std::vector<IntMatrix> gens;
    IntMatrix shift = cyclic_shift(n);
    IntMatrix flip = identity_int(n);
    flip(0, 0) = -1;
    gens.push_back(shift);
    if (rng() % 2) gens.push_back(flip);
    MatrixGroup g = close_group(gens);

    IntVector v = random_int_matrix(rng, n, 1, -2, 2).col(0);
    if (is_zero(v)) v[0] = 1;
    IntMatrix orbit(n, g.order());
    for (Index i = 0; i < g.order(); ++i) orbit.col(i) = g.element(i) * v;
    Sublattice s = saturate(Sublattice::span_of(n, orbit));
    REQUIRE(is_invariant(s, g));
    if (s.is_full()) continue;

    RatMatrix p = averaged_projection(s, g);
    CHECK(exact_eq(p * p, p));
    for (Index j = 0; j < s.rank(); ++j)
      CHECK(exact_eq(p * to_rat(s.basis().col(j).eval()),
                     to_rat(s.basis().col(j).eval())));
    for (Index i = 0; i < g.order(); ++i) {
      RatMatrix a = to_rat(g.element(i));
      CHECK(exact_eq(a * p, p * a));
    }

    Sublattice comp = invariant_complement(s, g);
    CHECK(saturate(comp) == comp);
    CHECK(is_invariant(comp, g));
    CHECK(meet(s, comp) == Sublattice::zero(n));
    CHECK(sum(s, comp) == Sublattice::full(n));
  }
}

TEST_CASE("fixed_subspace frozen examples") {
  CHECK(fixed_subspace(trivial_group(3)) == Sublattice::full(3));

  // Klein holonomy (cyclic shift) fixes exactly the constants line.
  for (Index n = 2; n <= 5; ++n) {
    MatrixGroup g = close_group({cyclic_shift(n)});
    Sublattice fix = fixed_subspace(g);
    CHECK(fix.rank() == 1);
    IntVector ones(n);
    for (Index i = 0; i < n; ++i) ones[i] = 1;
    CHECK(fix.contains_lattice_point(ones));
  }

  MatrixGroup pm = close_group({IntMatrix(-identity_int(2))});
  CHECK(fixed_subspace(pm) == Sublattice::zero(2));
}

TEST_CASE("find_proper_invariant_subspace frozen examples") {
  // Klein holonomy: stage (1) finds the constants line.
  for (Index n = 2; n <= 5; ++n) {
    MatrixGroup g = close_group({cyclic_shift(n)});
    auto s = find_proper_invariant_subspace(g);
    REQUIRE(s.has_value());
    CHECK(s->rank() == 1);
    IntVector ones(n);
    for (Index i = 0; i < n; ++i) ones[i] = 1;
    CHECK(s->contains_lattice_point(ones));
  }

  // The 90-degree rotation group acts irreducibly over Q.
  MatrixGroup rot = close_group({int_matrix({{0, -1}, {1, 0}})});
  CHECK(rot.order() == 4);
  CHECK(!find_proper_invariant_subspace(rot, 3).has_value());

  // Trivial group: everything is invariant; the first line found is e1.
  auto t = find_proper_invariant_subspace(trivial_group(2));
  REQUIRE(t.has_value());
  CHECK(*t == spann(2, {{1, 0}}));
}

TEST_CASE("found subspaces are always proper nonzero invariant") {
  std::mt19937_64 rng(11111);
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 2 + static_cast<Index>(rng() % 3);
    std::vector<IntMatrix> gens;
    // Random signed permutation generators.
    for (int k = 0; k < 2; ++k) {
      std::vector<Index> perm(static_cast<size_t>(n));
      for (Index i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      IntMatrix m(n, n);
      m.setZero();
      for (Index i = 0; i < n; ++i)
        m(perm[static_cast<size_t>(i)], i) = (rng() % 2) ? 1 : -1;
      gens.push_back(m);
    }
    MatrixGroup g = close_group(gens);
    auto s = find_proper_invariant_subspace(g, 2);
    if (s) {
      CHECK(s->rank() > 0);
      CHECK(s->rank() < n);
      CHECK(is_invariant(*s, g));
      CHECK(saturate(*s) == *s);
    }
  }
}

TEST_CASE("minimal_decomposition frozen examples") {
  // Trivial group on Z^2: split by coordinate lines.
  auto parts = minimal_decomposition(Sublattice::full(2), trivial_group(2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].space == spann(2, {{1, 0}}));
  CHECK(parts[1].space == spann(2, {{0, 1}}));
  CHECK(parts[0].minimal_at_bound);

  // Klein n=2: eigen-lines of diag(1,-1).
  MatrixGroup klein = close_group({int_matrix({{1, 0}, {0, -1}})});
  auto kparts = minimal_decomposition(Sublattice::full(2), klein);
  REQUIRE(kparts.size() == 2);
  CHECK(kparts[0].space == spann(2, {{1, 0}}));
  CHECK(kparts[1].space == spann(2, {{0, 1}}));

  // An already-minimal subspace: singleton list.
  auto single = minimal_decomposition(spann(2, {{1, 0}}), klein);
  REQUIRE(single.size() == 1);
  CHECK(single[0].space == spann(2, {{1, 0}}));
}

TEST_CASE("minimal_decomposition direct-sums to the input") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    Index n = 2 + static_cast<Index>(rng() % 3);
    std::vector<IntMatrix> gens{cyclic_shift(n)};
    if (rng() % 2) {
      IntMatrix neg = -identity_int(n);
      gens.push_back(neg);
    }
    MatrixGroup g = close_group(gens);
    auto parts = minimal_decomposition(Sublattice::full(n), g);
    Index total = 0;
    IntMatrix cat(n, 0);
    for (const auto& f : parts) {
      CHECK(is_invariant(f.space, g));
      CHECK(saturate(f.space) == f.space);
      CHECK(!find_proper_invariant_subspace_within(f.space, g, 3).has_value());
      total += f.space.rank();
      IntMatrix wider(n, cat.cols() + f.space.rank());
      wider.leftCols(cat.cols()) = cat;
      wider.rightCols(f.space.rank()) = f.space.basis();
      cat = wider;
    }
    CHECK(total == n);
    CHECK(rank_rational(to_rat(cat)) == n);
    CHECK(saturate(Sublattice::span_of(n, cat)) == Sublattice::full(n));
  }
}
