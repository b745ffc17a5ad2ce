#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

// Eigen scalar adaptors for the GMP types, per the custom-scalar recipe in
// the Eigen manual. Costs are rough ballpark figures; nothing here selects
// algorithms by magnitude.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 150,
    MulCost = 100,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace flatfol {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Base class of every error thrown by the library. `code()` is a stable
/// machine-readable tag, used verbatim by the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Canonical rational from a numerator/denominator pair. mpq_class does not
/// canonicalize two-argument constructions on its own.
inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("ZeroDenominator", "rational with denominator 0");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

/// Floor division on integers (mpz operator/ truncates).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) {
  return fdiv(x.get_num(), x.get_den());
}

/// Fractional part in [0, 1).
inline Rat frac(const Rat& x) { return x - Rat(floor_rat(x)); }

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_integral(m(i, j))) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exact_eq(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline RatMatrix to_rat(const IntMatrix& m) { return m.cast<Rat>(); }
inline RatVector to_rat(const IntVector& v) { return v.cast<Rat>(); }

/// Exact conversion of an integral rational matrix; throws on non-integral
/// entries.
template <typename Derived>
IntMatrix to_int(const Eigen::MatrixBase<Derived>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const Rat& x = m(i, j);
      if (!is_integral(x))
        throw Error("NotIntegral", "matrix entry is not an integer");
      out(i, j) = x.get_num();
    }
  return out;
}

inline IntVector to_int_vector(const RatVector& v) {
  IntMatrix m = to_int(v);
  return m.col(0);
}

/// Entrywise fractional part, the canonical representative mod Z^n.
inline RatVector frac(const RatVector& v) {
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = frac(v[i]);
  return out;
}

/// Smallest positive rescaling of a nonzero rational vector to a primitive
/// integer vector; sign fixed so the first nonzero entry is positive.
IntVector primitive_integer_vector(const RatVector& v);

/// Column-wise primitive rescaling (used to clear denominators from kernel
/// bases before saturation).
IntMatrix clear_denominators(const RatMatrix& m);

/// Exact determinant of an integer matrix (fraction-free Bareiss).
Int det_int(const IntMatrix& m);

/// Exact determinant of a rational matrix (Gaussian elimination, first
/// nonzero pivot).
Rat det_rat(const RatMatrix& m);

inline IntMatrix identity_int(Index n) {
  IntMatrix m(n, n);
  m.setZero();
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline RatMatrix identity_rat(Index n) {
  RatMatrix m(n, n);
  m.setZero();
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace flatfol
