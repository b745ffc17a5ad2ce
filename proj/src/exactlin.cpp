#include "flatfol/exactlin.hpp"

#include <vector>

namespace flatfol {

namespace {

// Row-style HNF of a: returns (H, U) with H = U * a, U unimodular.
// H is upper trapezoidal: pivot columns strictly increase by row, pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows last.
// The column-style form of the public API is this applied to the transpose.
std::pair<IntMatrix, IntMatrix> hnf_rows(const IntMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = identity_int(m);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    // Gcd elimination below row r in column c, smallest |pivot| first.
    for (;;) {
      Index p = -1;
      for (Index i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (p < 0 || abs(h(i, c)) < abs(h(p, c))) p = i;
      }
      if (p < 0) break;
      if (p != r) {
        h.row(r).swap(h.row(p));
        u.row(r).swap(u.row(p));
      }
      bool reduced_all = true;
      for (Index i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = fdiv(h(i, c), h(r, c));
        if (q != 0) {
          h.row(i) -= (q * h.row(r)).eval();
          u.row(i) -= (q * u.row(r)).eval();
        }
        if (h(i, c) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Index i = 0; i < r; ++i) {
      Int q = fdiv(h(i, c), h(r, c));
      if (q != 0) {
        h.row(i) -= (q * h.row(r)).eval();
        u.row(i) -= (q * u.row(r)).eval();
      }
    }
    ++r;
  }
  return {h, u};
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  auto [hr, ur] = hnf_rows(m.transpose());
  return {hr.transpose(), ur.transpose()};
}

Index SnfResult::rank() const {
  Index r = 0;
  const Index k = std::min(s.rows(), s.cols());
  for (Index i = 0; i < k; ++i)
    if (s(i, i) != 0) ++r;
  return r;
}

SnfResult snf(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = identity_int(rows);
  IntMatrix v = identity_int(cols);
  const Index k = std::min(rows, cols);

  for (Index t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block as pivot.
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pi < 0 || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block zero, done
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        v.col(t).swap(v.col(pj));
      }
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = fdiv(s(i, t), s(t, t));
        if (q != 0) {
          s.row(i) -= (q * s.row(t)).eval();
          u.row(i) -= (q * u.row(t)).eval();
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = fdiv(s(t, j), s(t, t));
        if (q != 0) {
          s.col(j) -= (q * s.col(t)).eval();
          v.col(j) -= (q * v.col(t)).eval();
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (s(t, t) < 0) {
        s.row(t) = -s.row(t);
        u.row(t) = -u.row(t);
      }
      // Divisibility: fold any non-multiple of the pivot into its row.
      Index bi = -1, bj = -1;
      for (Index i = t + 1; i < rows && bi < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      s.row(t) += s.row(bi);
      u.row(t) += u.row(bi);
    }
  }
  return {s, u, v};
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw Error("Shape", "solve_integer shape mismatch");
  SnfResult f = snf(a);
  IntVector c = f.u * b;
  const Index k = std::min(a.rows(), a.cols());
  IntVector y(a.cols());
  y.setZero();
  for (Index i = 0; i < a.rows(); ++i) {
    if (i < k && f.s(i, i) != 0) {
      if (c[i] % f.s(i, i) != 0) return std::nullopt;
      y[i] = c[i] / f.s(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return IntVector(f.v * y);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Index> rref(RatMatrix& a) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(r).swap(a.row(p));
    Rat inv = Rat(1) / a(r, c);
    for (Index j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix kernel_rational(const RatMatrix& a) {
  RatMatrix r = a;
  std::vector<Index> pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (Index c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  const Index dim = a.cols() - static_cast<Index>(pivots.size());
  RatMatrix kern(a.cols(), dim);
  kern.setZero();
  Index col = 0;
  for (Index freec = 0; freec < a.cols(); ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    RatVector x(a.cols());
    x.setZero();
    x[freec] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      x[pivots[pr]] = -r(static_cast<Index>(pr), freec);
    kern.col(col++) = to_rat(primitive_integer_vector(x));
  }
  return kern;
}

std::optional<RatVector> solve_rational(const RatMatrix& a,
                                        const RatVector& b) {
  if (a.rows() != b.size())
    throw Error("Shape", "solve_rational shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  x.setZero();
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    x[pivots[pr]] = aug(static_cast<Index>(pr), a.cols());
  return x;
}

RatMatrix inverse_rational(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("Shape", "inverse of non-square");
  const Index n = a.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity_rat(n);
  std::vector<Index> pivots = rref(aug);
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw Error("Singular", "matrix is not invertible");
  return aug.rightCols(n);
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  Int d = det_int(u);
  if (d != 1 && d != -1)
    throw Error("NotUnimodular", "matrix has |det| != 1");
  return to_int(inverse_rational(to_rat(u)));
}

Index rank_rational(const RatMatrix& a) {
  RatMatrix r = a;
  return static_cast<Index>(rref(r).size());
}

}  // namespace flatfol
