#include "lattol/blocks.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

// Bron-Kerbosch with pivoting over bitset vertex sets. adj excludes loops.
void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& adj, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (std::uint64_t t = p | x; t; t &= t - 1) {
    int v = std::countr_zero(t);
    int score = std::popcount(p & adj[v]);
    if (score > best) {
      best = score;
      pivot = v;
    }
  }
  for (std::uint64_t t = p & ~adj[pivot]; t; t &= t - 1) {
    int v = std::countr_zero(t);
    std::uint64_t bit = std::uint64_t{1} << v;
    bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
    p &= ~bit;
    x |= bit;
  }
}

std::string set_label(const Lattice& base, std::uint64_t mask) {
  std::ostringstream oss;
  oss << "{";
  bool first = true;
  for (std::uint64_t t = mask; t; t &= t - 1) {
    if (!first) {
      oss << ",";
    }
    first = false;
    oss << base.label(std::countr_zero(t));
  }
  oss << "}";
  return oss.str();
}

}  // namespace

std::string Block::label(const Lattice& base) const {
  return set_label(base, mask);
}

std::vector<Block> blocks_of(const Lattice& L, const BinaryRelation& rho) {
  const int n = L.size();
  if (n > 64) {
    throw TooLarge("block enumeration supports at most 64 elements, lattice has " +
                       std::to_string(n),
                   n, 64);
  }
  if (!is_tolerance(L, rho)) {
    throw NotATolerance("blocks are only defined for tolerances: " +
                        tolerance_violation_detail(L, rho));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && rho.contains(x, y)) {
        adj[x] |= std::uint64_t{1} << y;
      }
    }
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> cliques;
  bron_kerbosch(0, all, 0, adj, cliques);

  std::vector<Block> out;
  out.reserve(cliques.size());
  for (std::uint64_t mask : cliques) {
    Block b;
    b.mask = mask;
    for (std::uint64_t t = mask; t; t &= t - 1) {
      b.members.push_back(std::countr_zero(t));
    }
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockLattice::BlockLattice(Lattice base, BinaryRelation rho)
    : base_(std::move(base)), rho_(std::move(rho)) {
  blocks_ = blocks_of(base_, rho_);
  const int m = block_count();
  join_.assign(static_cast<std::size_t>(m) * m, -1);
  meet_.assign(static_cast<std::size_t>(m) * m, -1);

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      std::uint64_t joins = 0;
      std::uint64_t meets = 0;
      for (ElementId x : blocks_[a].members) {
        for (ElementId y : blocks_[b].members) {
          joins |= std::uint64_t{1} << base_.join(x, y);
          meets |= std::uint64_t{1} << base_.meet(x, y);
        }
      }
      join_[static_cast<std::size_t>(a) * m + b] = unique_block_including(joins, "join", a, b);
      meet_[static_cast<std::size_t>(a) * m + b] = unique_block_including(meets, "meet", a, b);
    }
  }

  // Order the blocks by A <= B iff A v B = B and validate the result as a
  // lattice; its recomputed tables must agree with the block tables.
  std::vector<std::string> labels(m);
  BinaryRelation leq(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = blocks_[a].label(base_);
    for (int b = 0; b < m; ++b) {
      if (join_[static_cast<std::size_t>(a) * m + b] == b) {
        leq.add(a, b);
      }
    }
  }
  lattice_ = Lattice::from_leq(std::move(labels), std::move(leq));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (lattice_.join(a, b) != join_[static_cast<std::size_t>(a) * m + b] ||
          lattice_.meet(a, b) != meet_[static_cast<std::size_t>(a) * m + b]) {
        throw NotALattice("block join/meet of " + blocks_[a].label(base_) + " and " +
                              blocks_[b].label(base_) +
                              " disagrees with the bounds of the derived block order",
                          a, b);
      }
    }
  }
  if (auto violation = find_lattice_law_violation(lattice_)) {
    throw NotALattice("block lattice violates a lattice law: " + *violation);
  }
}

int BlockLattice::unique_block_including(std::uint64_t set_mask, const char* op, int a,
                                         int b) const {
  int found = -1;
  int hits = 0;
  for (int c = 0; c < block_count(); ++c) {
    if ((set_mask & ~blocks_[c].mask) == 0) {
      found = c;
      ++hits;
    }
  }
  if (hits != 1) {
    std::ostringstream oss;
    oss << "block " << op << " of " << blocks_[a].label(base_) << " and "
        << blocks_[b].label(base_) << ": the set " << set_label(base_, set_mask)
        << " is included in " << hits << " blocks";
    if (hits > 1) {
      oss << " (";
      bool first = true;
      for (int c = 0; c < block_count(); ++c) {
        if ((set_mask & ~blocks_[c].mask) == 0) {
          if (!first) {
            oss << ", ";
          }
          first = false;
          oss << blocks_[c].label(base_);
        }
      }
      oss << ")";
    }
    throw UniquenessViolation(oss.str());
  }
  return found;
}

int BlockLattice::index_of(const Block& b) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end() || !(*it == b)) {
    throw NotABlock("the set " + b.label(base_) + " is not a block of this tolerance");
  }
  return static_cast<int>(it - blocks_.begin());
}

std::vector<int> BlockLattice::blocks_containing(ElementId x) const {
  std::vector<int> out;
  for (int c = 0; c < block_count(); ++c) {
    if (blocks_[c].contains(x)) {
      out.push_back(c);
    }
  }
  return out;
}

int BlockLattice::join_index(int a, int b) const {
  return join_.at(static_cast<std::size_t>(a) * block_count() + static_cast<std::size_t>(b));
}

int BlockLattice::meet_index(int a, int b) const {
  return meet_.at(static_cast<std::size_t>(a) * block_count() + static_cast<std::size_t>(b));
}

const Block& BlockLattice::block_join(const Block& a, const Block& b) const {
  return blocks_[join_index(index_of(a), index_of(b))];
}

const Block& BlockLattice::block_meet(const Block& a, const Block& b) const {
  return blocks_[meet_index(index_of(a), index_of(b))];
}

}  // namespace lattol
