#pragma once

#include <random>
#include <vector>

#include "flatfol/exactlin.hpp"
#include "flatfol/numeric.hpp"

namespace flatfol::testing {

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline IntVector int_vector(std::initializer_list<long> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline RatVector rat_vector(std::initializer_list<Rat> xs) {
  RatVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v[i++] = x;
  return v;
}

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  RatMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Rat& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, Index rows, Index cols,
                                   long lo = -4, long hi = 4) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = d(rng);
  return m;
}

/// Every column of b integrally expressible in the columns of a.
inline bool integer_span_contains(const IntMatrix& a, const IntMatrix& b) {
  for (Index j = 0; j < b.cols(); ++j)
    if (!solve_integer(a, b.col(j))) return false;
  return true;
}

/// Z-span equality by mutual integer solvability of columns.
inline bool same_integer_span(const IntMatrix& a, const IntMatrix& b) {
  return integer_span_contains(a, b) && integer_span_contains(b, a);
}

inline bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  Int d = det_int(u);
  return d == 1 || d == -1;
}

}  // namespace flatfol::testing
