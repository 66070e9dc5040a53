#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lattol/blocks.hpp"
#include "lattol/report.hpp"

namespace lattol {

/// The paired lattice built from a tolerance rho of a base lattice: its
/// elements are the pairs (A, x) with A a block of rho and x in A, ordered
/// block-major, with componentwise operations
///   (A, x) v (B, y) = (A v B, x v y)  and dually.
/// Carries the congruence theta identifying pairs with equal blocks and
/// the second-projection homomorphism phi onto the base. Construction
/// asserts the closure property x v y in A v B for every table entry, that
/// theta is a congruence, and that phi is a surjective homomorphism.
class PairedLattice {
public:
  PairedLattice(Lattice base, BinaryRelation rho);

  const Lattice& base() const { return block_lattice_.base(); }
  const BinaryRelation& rho() const { return block_lattice_.rho(); }
  const BlockLattice& block_lattice() const { return block_lattice_; }
  /// The paired lattice itself (with labels "A:x").
  const Lattice& lattice() const { return lattice_; }

  int block_of(ElementId k) const { return pairs_.at(static_cast<std::size_t>(k)).first; }
  ElementId element_of(ElementId k) const { return pairs_.at(static_cast<std::size_t>(k)).second; }
  const std::vector<std::pair<int, ElementId>>& pairs() const { return pairs_; }
  /// Element id of the pair (block, x); IndexOutOfRange when x is not a
  /// member of the block.
  ElementId index_of(int block, ElementId x) const;

  const BinaryRelation& theta() const { return theta_; }
  const Homomorphism& phi() const { return *phi_; }

private:
  BlockLattice block_lattice_;
  std::vector<std::pair<int, ElementId>> pairs_;
  std::vector<ElementId> pair_index_;
  Lattice lattice_;
  BinaryRelation theta_;
  std::optional<Homomorphism> phi_;
};

/// Runs the whole construction for a tolerance rho of L and reports:
/// lattice-hood of the paired lattice, congruence-hood of theta,
/// homomorphism and surjectivity of phi, and the bit-exact equality of
/// the image relation phi(theta) with rho (with witness pairs on failure).
VerificationReport verify_theorem1(const Lattice& L, const BinaryRelation& rho);

}  // namespace lattol
