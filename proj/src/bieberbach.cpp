#include "flatfol/bieberbach.hpp"

namespace flatfol {

namespace {

// b(i*j) == A_i b(j) + b(i) mod Z^n over the whole table.
void check_cocycle(const MatrixGroup& hol, const std::vector<RatVector>& b) {
  for (Index i = 0; i < hol.order(); ++i)
    for (Index j = 0; j < hol.order(); ++j) {
      RatVector expected = frac(RatVector(
          to_rat(hol.element(i)) * b[static_cast<size_t>(j)] +
          b[static_cast<size_t>(i)]));
      if (!exact_eq(expected, b[static_cast<size_t>(hol.multiply(i, j))]))
        throw Error("InconsistentVectorSystem",
                    "vector system violates the cocycle condition");
    }
}

}  // namespace

bool is_torsion_free(const MatrixGroup& hol, const VectorSystem& vsys) {
  const Index n = hol.dimension();
  for (Index i = 1; i < hol.order(); ++i) {
    const Index m = hol.element_order(i);
    IntMatrix na(n, n);
    na.setZero();
    IntMatrix power = identity_int(n);
    for (Index k = 0; k < m; ++k) {
      na += power;
      power = power * hol.element(i);
    }
    // (A, b(A)+lambda)^m = (I, N_A (b(A)+lambda)); torsion iff solvable.
    RatVector rhs = -(to_rat(na) * vsys[i]);
    if (!is_integral(rhs)) continue;
    if (solve_integer(na, to_int_vector(rhs))) return false;
  }
  return true;
}

BieberbachGroup build(RatMatrix gram,
                      const std::vector<IntMatrix>& point_generators,
                      const std::vector<RatVector>& translation_generators,
                      Index bound) {
  const Index n = gram.rows();
  Ambient amb(n, std::move(gram));
  if (point_generators.size() != translation_generators.size())
    throw Error("Shape", "generator counts must match");

  std::vector<IntMatrix> gens = point_generators;
  gens.push_back(identity_int(n));  // keeps the torus case (no generators) valid
  for (const IntMatrix& a : gens) {
    if (a.rows() != n || a.cols() != n)
      throw Error("Shape", "point generators must be n x n");
    if (!exact_eq(to_rat(a).transpose() * amb.gram() * to_rat(a), amb.gram()))
      throw Error("NotIsometric",
                  "point generator does not preserve the Gram matrix");
  }
  MatrixGroup hol = close_group(gens, bound);

  // Propagate translational parts from the generators along the table;
  // collisions must agree mod Z^n.
  std::vector<RatVector> b(static_cast<size_t>(hol.order()));
  std::vector<bool> known(static_cast<size_t>(hol.order()), false);
  RatVector zero(n);
  zero.setZero();
  b[0] = zero;
  known[0] = true;
  std::vector<std::pair<Index, RatVector>> gen_list;
  for (size_t t = 0; t < point_generators.size(); ++t) {
    if (translation_generators[t].size() != n)
      throw Error("Shape", "translation generators must have length n");
    Index gi = *hol.find(point_generators[t]);
    RatVector rep = frac(translation_generators[t]);
    if (known[static_cast<size_t>(gi)]) {
      if (!exact_eq(b[static_cast<size_t>(gi)], rep))
        throw Error("InconsistentVectorSystem",
                    "repeated generator with a different translational part");
    } else {
      b[static_cast<size_t>(gi)] = rep;
      known[static_cast<size_t>(gi)] = true;
    }
    gen_list.emplace_back(gi, rep);
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (Index i = 0; i < hol.order(); ++i) {
      if (!known[static_cast<size_t>(i)]) continue;
      for (const auto& [gi, bg] : gen_list) {
        Index k = hol.multiply(i, gi);
        RatVector candidate = frac(
            RatVector(to_rat(hol.element(i)) * bg + b[static_cast<size_t>(i)]));
        if (!known[static_cast<size_t>(k)]) {
          b[static_cast<size_t>(k)] = candidate;
          known[static_cast<size_t>(k)] = true;
          progress = true;
        } else if (!exact_eq(b[static_cast<size_t>(k)], candidate)) {
          throw Error("InconsistentVectorSystem",
                      "two derivations of a translational part disagree mod Z^n");
        }
      }
    }
  }
  for (bool k : known)
    if (!k)
      throw Error("InconsistentVectorSystem",
                  "vector system does not reach every holonomy element");
  check_cocycle(hol, b);

  VectorSystem vsys(std::move(b));
  if (!is_torsion_free(hol, vsys))
    throw Error("HasTorsion", "the group has a nontrivial finite-order element");
  return BieberbachGroup(std::move(amb), std::move(hol), std::move(vsys));
}

AffineElement BieberbachGroup::identity() const {
  IntVector z(dimension());
  z.setZero();
  return {0, z};
}

AffineElement BieberbachGroup::compose(const AffineElement& x,
                                       const AffineElement& y) const {
  const Index k = hol_.multiply(x.a, y.a);
  // carry = A_x b(y) + b(x) - b(xy), integral by the cocycle.
  RatVector carry =
      to_rat(hol_.element(x.a)) * vsys_[y.a] + vsys_[x.a] - vsys_[k];
  IntVector lattice = hol_.element(x.a) * y.lattice_part + x.lattice_part +
                      to_int_vector(carry);
  return {k, lattice};
}

AffineElement BieberbachGroup::inverse(const AffineElement& x) const {
  const Index inv = hol_.inverse(x.a);
  RatVector carry =
      -(to_rat(hol_.element(inv)) * (vsys_[x.a] + to_rat(x.lattice_part))) -
      vsys_[inv];
  return {inv, to_int_vector(carry)};
}

bool is_orientable(const BieberbachGroup& g) {
  for (const IntMatrix& a : g.holonomy().elements())
    if (det_int(a) != 1) return false;
  return true;
}

RatVector act(const AffineElement& e, const RatVector& x,
              const BieberbachGroup& g) {
  return to_rat(g.holonomy().element(e.a)) * x + g.vector_system()[e.a] +
         to_rat(e.lattice_part);
}

std::optional<AffineElement> same_orbit(const RatVector& x, const RatVector& y,
                                        const BieberbachGroup& g) {
  for (Index a = 0; a < g.holonomy().order(); ++a) {
    RatVector d =
        y - to_rat(g.holonomy().element(a)) * x - g.vector_system()[a];
    if (is_integral(d)) return AffineElement{a, to_int_vector(d)};
  }
  return std::nullopt;
}

BieberbachGroup direct_product(const BieberbachGroup& g1,
                               const BieberbachGroup& g2) {
  const Index n1 = g1.dimension(), n2 = g2.dimension();
  RatMatrix gram(n1 + n2, n1 + n2);
  gram.setZero();
  gram.topLeftCorner(n1, n1) = g1.ambient().gram();
  gram.bottomRightCorner(n2, n2) = g2.ambient().gram();
  std::vector<IntMatrix> gens;
  std::vector<RatVector> trans;
  RatVector zero1(n1), zero2(n2);
  zero1.setZero();
  zero2.setZero();
  // Embed every element of both factors; closure rebuilds H1 x H2 with the
  // blockwise vector system.
  for (Index i = 0; i < g1.holonomy().order(); ++i) {
    IntMatrix a(n1 + n2, n1 + n2);
    a.setZero();
    a.topLeftCorner(n1, n1) = g1.holonomy().element(i);
    a.bottomRightCorner(n2, n2) = identity_int(n2);
    RatVector b(n1 + n2);
    b << g1.vector_system()[i], zero2;
    gens.push_back(a);
    trans.push_back(b);
  }
  for (Index j = 0; j < g2.holonomy().order(); ++j) {
    IntMatrix a(n1 + n2, n1 + n2);
    a.setZero();
    a.topLeftCorner(n1, n1) = identity_int(n1);
    a.bottomRightCorner(n2, n2) = g2.holonomy().element(j);
    RatVector b(n1 + n2);
    b << zero1, g2.vector_system()[j];
    gens.push_back(a);
    trans.push_back(b);
  }
  return build(gram, gens, trans,
               g1.holonomy().order() * g2.holonomy().order() + 1);
}

}  // namespace flatfol
