#pragma once

#include <string>
#include <string_view>

#include "lattol/blocks.hpp"
#include "lattol/lattice.hpp"

namespace lattol {

/// Hasse diagram as a DOT digraph: one node per element, one edge per
/// cover pair, oriented bottom-to-top.
std::string dot_hasse(const Lattice& L, std::string_view graph_name);

/// Hasse diagram of the base lattice plus one cluster per block. DOT
/// clusters cannot share nodes, so an element lying in several blocks is
/// drawn once as a real node (in its first block) and as a dashed ghost
/// copy in every other block; a graph legend says so whenever ghosts
/// appear.
std::string dot_blocks(const BlockLattice& bl, std::string_view graph_name);

}  // namespace lattol
