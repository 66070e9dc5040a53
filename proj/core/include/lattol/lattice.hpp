#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lattol/relation.hpp"

namespace lattol {

/// Dense element id of a finite lattice; always in [0, n).
using ElementId = int;

/// A finite lattice: dense element ids, human-readable labels, the order
/// as a bit matrix, and precomputed join/meet tables.
///
/// Immutable after construction and safe to share between threads. Every
/// factory validates that the order is a partial order with a unique least
/// upper bound and greatest lower bound for each pair, failing with
/// NotALattice (carrying a witness pair) otherwise. Finite lattices are
/// bounded, so top() and bottom() always exist.
class Lattice {
public:
  /// Empty placeholder; every usable lattice comes from a factory below.
  Lattice() = default;

  /// Build from labels and a cover relation given as (lower, upper) label
  /// pairs. The order is the reflexive-transitive closure of the covers.
  static Lattice from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  /// Build from an explicit order matrix; validates everything.
  static Lattice from_leq(std::vector<std::string> labels, BinaryRelation leq);

  static Lattice chain(int n);
  static Lattice boolean_cube(int k);
  /// Builtin lattices by name: "M3" (diamond) or "N5" (pentagon).
  static Lattice named(std::string_view name);
  static Lattice direct_product(const Lattice& a, const Lattice& b);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId x) const { return labels_.at(static_cast<std::size_t>(x)); }
  std::optional<ElementId> index_of(std::string_view label) const;

  bool leq(ElementId x, ElementId y) const { return leq_.contains(x, y); }
  ElementId join(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  const BinaryRelation& order() const { return leq_; }

  /// Cover pairs (x, y) with x covered by y: the transitive reduction of
  /// the order, sorted by (x, y).
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  /// Length in covers of a longest bottom-to-top chain.
  int height() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  void compute_tables();

  std::vector<std::string> labels_;
  BinaryRelation leq_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

/// A join/meet preserving bijection between two lattices of equal size,
/// stored as the forward element map.
struct IsoMap {
  std::vector<ElementId> forward;
};

/// True iff forward is a bijection that preserves join and meet elementwise.
bool is_isomorphism(const Lattice& a, const Lattice& b, const std::vector<ElementId>& forward);

/// First join/meet preserving bijection in lexicographic backtracking
/// order, if any. Prunes by (chain depth, lower covers, upper covers)
/// profiles before searching.
std::optional<IsoMap> find_isomorphism(const Lattice& a, const Lattice& b);

/// Checks commutativity, associativity, idempotence, absorption, and the
/// order/join coherence (x <= y iff x v y = y) directly on the tables.
/// Returns a description of the first violated law, or nullopt.
std::optional<std::string> find_lattice_law_violation(const Lattice& L);

}  // namespace lattol
