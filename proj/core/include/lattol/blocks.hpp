#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattol/lattice.hpp"
#include "lattol/tolerance.hpp"

namespace lattol {

/// A maximal subset X of the lattice with X x X inside the owning
/// tolerance. Members are sorted ascending; mask mirrors them as a bitset.
struct Block {
  std::vector<ElementId> members;
  std::uint64_t mask = 0;

  bool contains(ElementId x) const { return (mask >> x) & 1u; }
  /// "{o,a}" under the labels of the base lattice.
  std::string label(const Lattice& base) const;

  friend bool operator==(const Block& a, const Block& b) { return a.members == b.members; }
  friend bool operator<(const Block& a, const Block& b) { return a.members < b.members; }
};

/// All blocks of a tolerance: the maximal cliques of its non-diagonal
/// graph, sorted lexicographically by member list. Supports lattices of
/// up to 64 elements.
std::vector<Block> blocks_of(const Lattice& L, const BinaryRelation& rho);

/// The lattice L/rho of all blocks of a tolerance, where A v B is the
/// unique block including { a v b : a in A, b in B } and dually for the
/// meet. Construction computes every join/meet through that uniqueness
/// rule and then re-validates the result through the full lattice checks.
class BlockLattice {
public:
  BlockLattice(Lattice base, BinaryRelation rho);

  const Lattice& base() const { return base_; }
  const BinaryRelation& rho() const { return rho_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int id) const { return blocks_.at(static_cast<std::size_t>(id)); }
  /// The lattice structure on block ids (labels are the block labels).
  const Lattice& lattice() const { return lattice_; }

  /// Position of a block in the canonical block list; NotABlock if absent.
  int index_of(const Block& b) const;
  std::vector<int> blocks_containing(ElementId x) const;

  int join_index(int a, int b) const;
  int meet_index(int a, int b) const;
  const Block& block_join(const Block& a, const Block& b) const;
  const Block& block_meet(const Block& a, const Block& b) const;

private:
  int unique_block_including(std::uint64_t set_mask, const char* op, int a, int b) const;

  Lattice base_;
  BinaryRelation rho_;
  std::vector<Block> blocks_;
  std::vector<int> join_;
  std::vector<int> meet_;
  Lattice lattice_;
};

}  // namespace lattol
