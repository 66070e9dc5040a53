#pragma once

#include <optional>
#include <vector>

#include "lattol/construction.hpp"

namespace lattol {

/// The quotient L/gamma of a lattice by a congruence: classes sorted by
/// least member, the lattice structure on classes, and the canonical
/// projection. Class operations are computed from least-member
/// representatives (well-defined because gamma is a congruence) and then
/// re-validated through the full lattice checks.
class QuotientLattice {
public:
  QuotientLattice(Lattice base, BinaryRelation gamma);

  const Lattice& base() const { return base_; }
  const BinaryRelation& gamma() const { return gamma_; }
  const std::vector<std::vector<ElementId>>& classes() const { return classes_; }
  int class_of(ElementId x) const { return class_of_.at(static_cast<std::size_t>(x)); }
  const Lattice& lattice() const { return lattice_; }
  const Homomorphism& projection() const { return *proj_; }

private:
  Lattice base_;
  BinaryRelation gamma_;
  std::vector<std::vector<ElementId>> classes_;
  std::vector<int> class_of_;
  Lattice lattice_;
  std::optional<Homomorphism> proj_;
};

/// The congruence { (x, y) : phi(x) = phi(y) } of phi's domain.
BinaryRelation kernel(const Homomorphism& phi);

/// The relation alpha/gamma on the quotient by gamma: classes X and Y are
/// related iff some representatives u in X, v in Y satisfy (u, v) in alpha.
/// Cross-checked against image_relation(projection, alpha); both arguments
/// must be congruences.
BinaryRelation alpha_over_gamma(const QuotientLattice& q, const BinaryRelation& alpha);
BinaryRelation alpha_over_gamma(const Lattice& L, const BinaryRelation& alpha,
                                const BinaryRelation& gamma);

/// Checks that alpha/gamma is a tolerance on L/gamma and that the two
/// ways of computing it agree.
VerificationReport verify_theorem2_forward(const Lattice& L, const BinaryRelation& alpha,
                                           const BinaryRelation& gamma);

/// For a tolerance tau of K: builds the paired lattice L of (K, tau),
/// takes alpha := its theta and gamma := the kernel of its projection,
/// forms L/gamma, constructs the isomorphism psi: L/gamma -> K induced by
/// the projection, and checks that transporting alpha/gamma along psi
/// gives back exactly tau.
VerificationReport verify_theorem2_converse(const Lattice& K, const BinaryRelation& tau);

}  // namespace lattol
