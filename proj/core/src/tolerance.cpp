#include "lattol/tolerance.hpp"

#include <algorithm>
#include <sstream>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

void check_size(const Lattice& L, const BinaryRelation& R) {
  if (R.size() != L.size()) {
    throw SizeMismatch("relation on " + std::to_string(R.size()) +
                       " elements does not match a lattice of size " + std::to_string(L.size()));
  }
}

// Returns false and fills the offending derived pair when substitution fails.
bool substitution_holds(const Lattice& L, const BinaryRelation& R,
                        std::pair<int, int>* missing = nullptr) {
  const auto related = R.pairs();
  for (auto [a, b] : related) {
    for (auto [c, d] : related) {
      int ju = L.join(a, c);
      int jv = L.join(b, d);
      if (!R.contains(ju, jv)) {
        if (missing) {
          *missing = {ju, jv};
        }
        return false;
      }
      int mu = L.meet(a, c);
      int mv = L.meet(b, d);
      if (!R.contains(mu, mv)) {
        if (missing) {
          *missing = {mu, mv};
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_tolerance(const Lattice& L, const BinaryRelation& R) {
  check_size(L, R);
  return R.is_reflexive() && R.is_symmetric() && substitution_holds(L, R);
}

bool is_congruence(const Lattice& L, const BinaryRelation& R) {
  return is_tolerance(L, R) && R.is_transitive();
}

std::string tolerance_violation_detail(const Lattice& L, const BinaryRelation& R) {
  check_size(L, R);
  if (!R.is_reflexive()) {
    return "relation is not reflexive";
  }
  if (!R.is_symmetric()) {
    return "relation is not symmetric";
  }
  std::pair<int, int> missing;
  if (!substitution_holds(L, R, &missing)) {
    return "substitution requires ('" + L.label(missing.first) + "', '" +
           L.label(missing.second) + "') which is absent";
  }
  return "";
}

BinaryRelation tolerance_generated_by(const Lattice& L,
                                      const std::vector<std::pair<ElementId, ElementId>>& pairs) {
  const int n = L.size();
  BinaryRelation rel = BinaryRelation::diagonal(n);
  std::vector<std::pair<int, int>> worklist = rel.pairs();
  auto push = [&](int x, int y) {
    if (!rel.contains(x, y)) {
      rel.add(x, y);
      worklist.emplace_back(x, y);
    }
  };
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw IndexOutOfRange("generator pair (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") out of range for a lattice of size " + std::to_string(n));
    }
    push(x, y);
    push(y, x);
  }
  // Each pair is eventually combined with every other: when the later of
  // two pairs is processed, the earlier one is already on the list.
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    auto [a, b] = worklist[i];
    const std::size_t limit = worklist.size();
    for (std::size_t j = 0; j < limit; ++j) {
      auto [c, d] = worklist[j];
      int ju = L.join(a, c);
      int jv = L.join(b, d);
      push(ju, jv);
      push(jv, ju);
      int mu = L.meet(a, c);
      int mv = L.meet(b, d);
      push(mu, mv);
      push(mv, mu);
    }
  }
  return rel;
}

namespace {

std::vector<BinaryRelation> enumerate_filtered(const Lattice& L, int cap, bool transitive_only) {
  const int n = L.size();
  const long long p = static_cast<long long>(n) * (n - 1) / 2;
  // Masks are 64-bit, so 62 is a hard ceiling regardless of the cap.
  const long long effective_cap = std::min<long long>(cap, 62);
  if (p > effective_cap) {
    throw TooLarge("enumeration over " + std::to_string(p) +
                       " element pairs exceeds the cap of " + std::to_string(effective_cap),
                   p, effective_cap);
  }
  std::vector<std::pair<int, int>> pair_bits;
  pair_bits.reserve(static_cast<std::size_t>(p));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      pair_bits.emplace_back(x, y);
    }
  }
  std::vector<BinaryRelation> out;
  const BinaryRelation diag = BinaryRelation::diagonal(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    BinaryRelation rel = diag;
    for (long long k = 0; k < p; ++k) {
      if ((mask >> k) & 1u) {
        rel.add_symmetric(pair_bits[static_cast<std::size_t>(k)].first,
                          pair_bits[static_cast<std::size_t>(k)].second);
      }
    }
    if (!substitution_holds(L, rel)) {
      continue;
    }
    if (transitive_only && !rel.is_transitive()) {
      continue;
    }
    out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BinaryRelation> enumerate_tolerances(const Lattice& L, int cap) {
  return enumerate_filtered(L, cap, false);
}

std::vector<BinaryRelation> enumerate_congruences(const Lattice& L, int cap) {
  return enumerate_filtered(L, cap, true);
}

std::string format_pairs(const Lattice& L, const BinaryRelation& R) {
  check_size(L, R);
  std::ostringstream oss;
  oss << "{";
  bool first = true;
  for (auto [x, y] : R.upper_pairs()) {
    if (!first) {
      oss << ",";
    }
    first = false;
    oss << "(" << L.label(x) << "," << L.label(y) << ")";
  }
  oss << "}";
  return oss.str();
}

Homomorphism::Homomorphism(Lattice dom, Lattice cod, std::vector<ElementId> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != dom_.size()) {
    throw SizeMismatch("map covers " + std::to_string(map_.size()) +
                       " elements, domain has " + std::to_string(dom_.size()));
  }
  for (ElementId v : map_) {
    if (v < 0 || v >= cod_.size()) {
      throw IndexOutOfRange("map value " + std::to_string(v) +
                            " out of range for a codomain of size " +
                            std::to_string(cod_.size()));
    }
  }
  if (!is_homomorphism(dom_, cod_, map_)) {
    throw NotAHomomorphism("map does not preserve join and meet");
  }
}

Homomorphism Homomorphism::identity(const Lattice& L) {
  std::vector<ElementId> map(L.size());
  for (int x = 0; x < L.size(); ++x) {
    map[x] = x;
  }
  return Homomorphism(L, L, std::move(map));
}

bool is_homomorphism(const Lattice& dom, const Lattice& cod, const std::vector<ElementId>& map) {
  if (static_cast<int>(map.size()) != dom.size()) {
    throw SizeMismatch("map covers " + std::to_string(map.size()) + " elements, domain has " +
                       std::to_string(dom.size()));
  }
  for (ElementId v : map) {
    if (v < 0 || v >= cod.size()) {
      return false;
    }
  }
  for (int x = 0; x < dom.size(); ++x) {
    for (int y = 0; y < dom.size(); ++y) {
      if (map[dom.join(x, y)] != cod.join(map[x], map[y]) ||
          map[dom.meet(x, y)] != cod.meet(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

bool is_surjective(const Homomorphism& phi) {
  std::vector<bool> hit(phi.cod().size(), false);
  for (ElementId v : phi.map()) {
    hit[v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

BinaryRelation image_relation(const Homomorphism& phi, const BinaryRelation& theta) {
  if (theta.size() != phi.dom().size()) {
    throw SizeMismatch("relation on " + std::to_string(theta.size()) +
                       " elements does not match a domain of size " +
                       std::to_string(phi.dom().size()));
  }
  BinaryRelation out(phi.cod().size());
  for (auto [x, y] : theta.pairs()) {
    out.add(phi(x), phi(y));
  }
  return out;
}

}  // namespace lattol
