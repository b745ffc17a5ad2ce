#include "flatfol/corpus.hpp"

#include <algorithm>

namespace flatfol {

Index FiniteGroupTable::inverse(Index a) const {
  for (Index b = 0; b < order(); ++b)
    if (multiply(a, b) == 0) return b;
  throw Error("InvalidTable", "element without inverse");
}

void FiniteGroupTable::validate() const {
  const Index n = order();
  if (n == 0) throw Error("InvalidTable", "empty multiplication table");
  for (const auto& row : products)
    if (static_cast<Index>(row.size()) != n)
      throw Error("InvalidTable", "multiplication table is not square");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (multiply(a, b) < 0 || multiply(a, b) >= n)
        throw Error("InvalidTable", "table entry out of range");
  for (Index a = 0; a < n; ++a)
    if (multiply(0, a) != a || multiply(a, 0) != a)
      throw Error("InvalidTable", "index 0 is not an identity");
  for (Index a = 0; a < n; ++a) {
    std::vector<bool> seen_row(static_cast<size_t>(n), false);
    std::vector<bool> seen_col(static_cast<size_t>(n), false);
    for (Index b = 0; b < n; ++b) {
      if (seen_row[static_cast<size_t>(multiply(a, b))])
        throw Error("InvalidTable", "row is not a permutation");
      if (seen_col[static_cast<size_t>(multiply(b, a))])
        throw Error("InvalidTable", "column is not a permutation");
      seen_row[static_cast<size_t>(multiply(a, b))] = true;
      seen_col[static_cast<size_t>(multiply(b, a))] = true;
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw Error("InvalidTable", "multiplication is not associative");
}

void FiniteGroupTable::validate_subgroup(const std::vector<Index>& sub) const {
  if (std::find(sub.begin(), sub.end(), Index{0}) == sub.end())
    throw Error("NotSubgroup", "subgroup must contain the identity");
  for (Index a : sub) {
    if (a < 0 || a >= order())
      throw Error("NotSubgroup", "subgroup index out of range");
    for (Index b : sub)
      if (std::find(sub.begin(), sub.end(), multiply(a, b)) == sub.end())
        throw Error("NotSubgroup", "subgroup is not closed under products");
  }
}

KleinData klein_bottle(Index n) {
  if (n < 2) throw Error("BadDimension", "Klein bottles need n >= 2");
  // Standard coordinates of Z^H first: the lattice is
  // {v in Z^n : n | sum v} with Z-basis u0 = (1,...,1), u_j = e_{j+1} - e_1,
  // and the holonomy generator is the cyclic coordinate shift. Everything is
  // then conjugated into the u-basis; exactness of the conjugation doubles
  // as a transcription check.
  IntMatrix s(n, n);
  s.setZero();
  for (Index i = 0; i < n; ++i) s(i, 0) = 1;
  for (Index j = 1; j < n; ++j) {
    s(0, j) = -1;
    s(j, j) = 1;
  }
  IntMatrix shift(n, n);
  shift.setZero();
  for (Index i = 0; i < n; ++i) shift((i + 1) % n, i) = 1;
  RatMatrix m_rat = inverse_rational(to_rat(s)) * to_rat(shift) * to_rat(s);
  IntMatrix m = to_int(m_rat);  // the shift preserves the sublattice

  RatMatrix gram = to_rat(IntMatrix(s.transpose() * s));
  RatVector b(n);
  b.setZero();
  b[0] = rat(1, static_cast<long>(n));

  BieberbachGroup group = build(gram, {m}, {b}, n + 1);

  IntMatrix e1(n, 1);
  e1.setZero();
  e1(0, 0) = 1;
  IntMatrix rest(n, n - 1);
  rest.setZero();
  for (Index j = 0; j < n - 1; ++j) rest(j + 1, j) = 1;
  return {std::move(group), Sublattice::span_of(n, e1),
          Sublattice::span_of(n, rest)};
}

RegularRepData regular_rep(const FiniteGroupTable& table,
                           const std::vector<Index>& subgroup) {
  table.validate();
  table.validate_subgroup(subgroup);
  const Index n = table.order();

  // rho(a) e_h = e_{a^{-1} h}: the right action f -> f o tau_a on Z^H.
  std::vector<IntMatrix> elements;
  elements.reserve(static_cast<size_t>(n));
  for (Index a = 0; a < n; ++a) {
    Index ainv = table.inverse(a);
    IntMatrix m(n, n);
    m.setZero();
    for (Index h = 0; h < n; ++h) m(table.multiply(ainv, h), h) = 1;
    elements.push_back(std::move(m));
  }
  MatrixGroup hol = MatrixGroup::from_elements(std::move(elements));

  // Left cosets a * subgroup partition H.
  std::vector<Index> coset_of(static_cast<size_t>(n), -1);
  std::vector<std::vector<Index>> cosets;
  for (Index a = 0; a < n; ++a) {
    if (coset_of[static_cast<size_t>(a)] >= 0) continue;
    std::vector<Index> coset;
    for (Index h : subgroup) {
      Index x = table.multiply(a, h);
      if (coset_of[static_cast<size_t>(x)] < 0) {
        coset_of[static_cast<size_t>(x)] = static_cast<Index>(cosets.size());
        coset.push_back(x);
      }
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }

  IntMatrix constants(n, static_cast<Index>(cosets.size()));
  constants.setZero();
  Index averaging_cols = 0;
  for (const auto& coset : cosets)
    averaging_cols += static_cast<Index>(coset.size()) - 1;
  IntMatrix zero_avg(n, averaging_cols);
  zero_avg.setZero();
  Index col = 0;
  for (size_t c = 0; c < cosets.size(); ++c) {
    for (Index x : cosets[c]) constants(x, static_cast<Index>(c)) = 1;
    for (size_t t = 1; t < cosets[c].size(); ++t) {
      zero_avg(cosets[c][t], col) = 1;
      zero_avg(cosets[c][0], col) = -1;
      ++col;
    }
  }
  return {Ambient::standard(n), std::move(hol),
          Sublattice::span_of(n, constants), Sublattice::span_of(n, zero_avg)};
}

BieberbachGroup torus(RatMatrix gram) { return build(std::move(gram), {}, {}); }

}  // namespace flatfol
