#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lattol {

/// Square boolean matrix over element ids 0..n-1.
///
/// Used both for lattice orders and for the reflexive-symmetric relations
/// (tolerances, congruences) handled by the relation machinery. Raw values
/// may violate reflexivity or symmetry; the predicates below test them.
/// Value type, compared bit for bit; operator< is the canonical row-major
/// order used wherever relation lists must be deterministic.
class BinaryRelation {
public:
  BinaryRelation() = default;
  explicit BinaryRelation(int n);

  static BinaryRelation diagonal(int n);
  static BinaryRelation full(int n);

  int size() const { return n_; }
  bool contains(int x, int y) const;
  void add(int x, int y);
  void add_symmetric(int x, int y);
  void remove(int x, int y);

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  /// Number of related ordered pairs.
  std::size_t count() const;
  bool subset_of(const BinaryRelation& other) const;

  /// All related ordered pairs in row-major order.
  std::vector<std::pair<int, int>> pairs() const;
  /// Related pairs (x, y) with x < y, in row-major order.
  std::vector<std::pair<int, int>> upper_pairs() const;

  /// Reflexive-transitive Warshall closure, in place.
  void close_transitively();

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;
  /// Row-major lexicographic order on the bit matrix; absent < present.
  friend bool operator<(const BinaryRelation& a, const BinaryRelation& b);

  BinaryRelation& operator&=(const BinaryRelation& other);
  friend BinaryRelation operator&(BinaryRelation a, const BinaryRelation& b) {
    a &= b;
    return a;
  }

private:
  void check_index(int x, int y) const;
  const std::uint64_t* row(int x) const { return words_.data() + static_cast<std::size_t>(x) * words_per_row_; }
  std::uint64_t* row(int x) { return words_.data() + static_cast<std::size_t>(x) * words_per_row_; }

  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lattol
