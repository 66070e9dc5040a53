#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lattol/lattice.hpp"

namespace lattol {

/// Hard default on the number of unordered non-diagonal pairs an
/// exhaustive relation enumeration may iterate over (2^p candidates).
inline constexpr int kDefaultEnumerationCap = 24;

/// Reflexive, symmetric, and closed under the substitution properties:
/// (a,b), (c,d) in R imply (a v c, b v d) and (a ^ c, b ^ d) in R.
bool is_tolerance(const Lattice& L, const BinaryRelation& R);

/// A transitive tolerance.
bool is_congruence(const Lattice& L, const BinaryRelation& R);

/// Human-readable description of why R fails to be a tolerance of L,
/// or an empty string when it is one.
std::string tolerance_violation_detail(const Lattice& L, const BinaryRelation& R);

/// Least tolerance of L containing the given pairs (tolerances are closed
/// under intersection, so it exists). Worklist fixpoint: diagonal, symmetry,
/// then substitution-derived pairs until stable.
BinaryRelation tolerance_generated_by(const Lattice& L,
                                      const std::vector<std::pair<ElementId, ElementId>>& pairs);

/// All tolerances of L, canonically ordered, by brute force over the 2^p
/// symmetric reflexive relations. Throws TooLarge when p exceeds the cap
/// rather than switching algorithms.
std::vector<BinaryRelation> enumerate_tolerances(const Lattice& L,
                                                 int cap = kDefaultEnumerationCap);

/// As enumerate_tolerances with transitivity added to the filter.
std::vector<BinaryRelation> enumerate_congruences(const Lattice& L,
                                                  int cap = kDefaultEnumerationCap);

/// "{(0,a),(a,1)}": the non-diagonal symmetric pairs of R under the labels
/// of L, in canonical order.
std::string format_pairs(const Lattice& L, const BinaryRelation& R);

/// A total join/meet preserving map between lattices. Validation is eager:
/// the constructor rejects non-homomorphisms, so downstream code may rely
/// on the preservation laws. Surjectivity is a queried property, not a
/// construction requirement.
class Homomorphism {
public:
  Homomorphism(Lattice dom, Lattice cod, std::vector<ElementId> map);

  static Homomorphism identity(const Lattice& L);

  const Lattice& dom() const { return dom_; }
  const Lattice& cod() const { return cod_; }
  const std::vector<ElementId>& map() const { return map_; }
  ElementId operator()(ElementId x) const { return map_.at(static_cast<std::size_t>(x)); }

private:
  Lattice dom_;
  Lattice cod_;
  std::vector<ElementId> map_;
};

bool is_homomorphism(const Lattice& dom, const Lattice& cod, const std::vector<ElementId>& map);
bool is_surjective(const Homomorphism& phi);

/// The image relation { (phi(x), phi(y)) : (x, y) in theta } on phi's
/// codomain.
BinaryRelation image_relation(const Homomorphism& phi, const BinaryRelation& theta);

}  // namespace lattol
