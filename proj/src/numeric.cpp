#include "flatfol/numeric.hpp"

namespace flatfol {

IntVector primitive_integer_vector(const RatVector& v) {
  Int den_lcm = 1;
  for (Index i = 0; i < v.size(); ++i)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v[i].get_den().get_mpz_t());
  IntVector w(v.size());
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den_lcm);
    w[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) throw Error("ZeroVector", "cannot normalize the zero vector");
  Int sign = 0;
  for (Index i = 0; i < w.size(); ++i)
    if (w[i] != 0) {
      sign = w[i] > 0 ? 1 : -1;
      break;
    }
  for (Index i = 0; i < w.size(); ++i) w[i] = w[i] * sign / g;
  return w;
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    out.col(j) = primitive_integer_vector(m.col(j));
  return out;
}

Int det_int(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("Shape", "determinant of non-square");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  Int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // exact by Bareiss
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det_rat(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("Shape", "determinant of non-square");
  const Index n = m.rows();
  RatMatrix a = m;
  Rat det = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = -1;
    for (Index i = k; i < n; ++i)
      if (a(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != k) {
      a.row(k).swap(a.row(p));
      det = -det;
    }
    det *= a(k, k);
    Rat inv_pivot = Rat(1) / a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) * inv_pivot;
      for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace flatfol
