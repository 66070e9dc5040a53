#include "lattol/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw NotALattice("a lattice needs at least one element");
  }
  std::unordered_map<std::string, int> seen;
  for (const auto& l : labels) {
    if (!seen.emplace(l, 1).second) {
      throw DuplicateLabel("duplicate element label '" + l + "'");
    }
  }
}

}  // namespace

ElementId Lattice::join(ElementId x, ElementId y) const {
  return join_.at(static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y));
}

ElementId Lattice::meet(ElementId x, ElementId y) const {
  return meet_.at(static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y));
}

std::optional<ElementId> Lattice::index_of(std::string_view label) const {
  for (int x = 0; x < size(); ++x) {
    if (labels_[x] == label) {
      return x;
    }
  }
  return std::nullopt;
}

void Lattice::compute_tables() {
  const int n = size();
  if (!leq_.is_reflexive()) {
    throw NotALattice("order is not reflexive");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (leq_.contains(x, y) && leq_.contains(y, x)) {
        throw NotALattice("order is not antisymmetric between '" + labels_[x] + "' and '" +
                              labels_[y] + "'",
                          x, y);
      }
    }
  }
  if (!leq_.is_transitive()) {
    throw NotALattice("order is not transitive");
  }

  join_.assign(static_cast<std::size_t>(n) * n, 0);
  meet_.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> bounds;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // Least upper bound of {x, y}.
      bounds.clear();
      for (int z = 0; z < n; ++z) {
        if (leq_.contains(x, z) && leq_.contains(y, z)) {
          bounds.push_back(z);
        }
      }
      int least = -1;
      for (int z : bounds) {
        bool below_all = true;
        for (int w : bounds) {
          if (!leq_.contains(z, w)) {
            below_all = false;
            break;
          }
        }
        if (below_all) {
          least = z;
          break;
        }
      }
      if (least < 0) {
        std::ostringstream oss;
        if (bounds.empty()) {
          oss << "elements '" << labels_[x] << "' and '" << labels_[y]
              << "' have no common upper bound";
        } else {
          oss << "elements '" << labels_[x] << "' and '" << labels_[y]
              << "' have no least upper bound (minimal upper bounds:";
          for (int z : bounds) {
            bool minimal = true;
            for (int w : bounds) {
              if (w != z && leq_.contains(w, z)) {
                minimal = false;
                break;
              }
            }
            if (minimal) {
              oss << " '" << labels_[z] << "'";
            }
          }
          oss << ")";
        }
        throw NotALattice(oss.str(), x, y);
      }
      join_[static_cast<std::size_t>(x) * n + y] = least;

      // Greatest lower bound, dually.
      bounds.clear();
      for (int z = 0; z < n; ++z) {
        if (leq_.contains(z, x) && leq_.contains(z, y)) {
          bounds.push_back(z);
        }
      }
      int greatest = -1;
      for (int z : bounds) {
        bool above_all = true;
        for (int w : bounds) {
          if (!leq_.contains(w, z)) {
            above_all = false;
            break;
          }
        }
        if (above_all) {
          greatest = z;
          break;
        }
      }
      if (greatest < 0) {
        std::ostringstream oss;
        if (bounds.empty()) {
          oss << "elements '" << labels_[x] << "' and '" << labels_[y]
              << "' have no common lower bound";
        } else {
          oss << "elements '" << labels_[x] << "' and '" << labels_[y]
              << "' have no greatest lower bound";
        }
        throw NotALattice(oss.str(), x, y);
      }
      meet_[static_cast<std::size_t>(x) * n + y] = greatest;
    }
  }

  bottom_ = 0;
  top_ = 0;
  for (int x = 1; x < n; ++x) {
    bottom_ = meet(bottom_, x);
    top_ = join(top_, x);
  }
}

Lattice Lattice::from_leq(std::vector<std::string> labels, BinaryRelation leq) {
  check_labels(labels);
  if (leq.size() != static_cast<int>(labels.size())) {
    throw SizeMismatch("order matrix size " + std::to_string(leq.size()) +
                       " does not match " + std::to_string(labels.size()) + " labels");
  }
  Lattice L;
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  L.compute_tables();
  return L;
}

Lattice Lattice::from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> index;
  for (int x = 0; x < n; ++x) {
    index.emplace(labels[x], x);
  }

  BinaryRelation leq(n);
  for (const auto& [lo, hi] : covers) {
    auto it_lo = index.find(lo);
    auto it_hi = index.find(hi);
    if (it_lo == index.end() || it_hi == index.end()) {
      throw UnknownLabel("cover pair ('" + lo + "', '" + hi +
                         "') references an undeclared label");
    }
    if (it_lo->second == it_hi->second) {
      throw CycleDetected("cover loop at '" + lo + "'");
    }
    leq.add(it_lo->second, it_hi->second);
  }
  leq.close_transitively();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (leq.contains(x, y) && leq.contains(y, x)) {
        throw CycleDetected("cover graph has a cycle through '" + labels[x] + "' and '" +
                            labels[y] + "'");
      }
    }
  }
  return from_leq(labels, std::move(leq));
}

Lattice Lattice::chain(int n) {
  if (n < 1) {
    throw NotALattice("a chain needs at least one element, got " + std::to_string(n));
  }
  std::vector<std::string> labels(n);
  BinaryRelation leq(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = std::to_string(x);
    for (int y = x; y < n; ++y) {
      leq.add(x, y);
    }
  }
  return from_leq(std::move(labels), std::move(leq));
}

Lattice Lattice::boolean_cube(int k) {
  if (k < 0) {
    throw NotALattice("boolean cube dimension must be nonnegative, got " + std::to_string(k));
  }
  if (k == 0) {
    return chain(1);
  }
  const int n = 1 << k;
  std::vector<std::string> labels(n);
  BinaryRelation leq(n);
  for (int m = 0; m < n; ++m) {
    std::string bits(k, '0');
    for (int j = 0; j < k; ++j) {
      if ((m >> (k - 1 - j)) & 1) {
        bits[j] = '1';
      }
    }
    labels[m] = bits;
    for (int w = 0; w < n; ++w) {
      if ((m & w) == m) {
        leq.add(m, w);
      }
    }
  }
  return from_leq(std::move(labels), std::move(leq));
}

Lattice Lattice::named(std::string_view name) {
  if (name == "M3") {
    return from_covers({"o", "a", "b", "c", "i"},
                       {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"a", "i"}, {"b", "i"}, {"c", "i"}});
  }
  if (name == "N5") {
    return from_covers({"o", "a", "b", "c", "i"},
                       {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}});
  }
  throw UnknownName("unknown builtin lattice '" + std::string(name) + "' (expected M3 or N5)");
}

Lattice Lattice::direct_product(const Lattice& a, const Lattice& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na * nb;
  std::vector<std::string> labels(n);
  BinaryRelation leq(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y) {
      if (a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb)) {
        leq.add(x, y);
      }
    }
  }
  return from_leq(std::move(labels), std::move(leq));
}

std::vector<std::pair<ElementId, ElementId>> Lattice::covers() const {
  const int n = size();
  std::vector<std::pair<ElementId, ElementId>> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq_.contains(x, y)) {
        continue;
      }
      bool direct = true;
      for (int z = 0; z < n; ++z) {
        if (z != x && z != y && leq_.contains(x, z) && leq_.contains(z, y)) {
          direct = false;
          break;
        }
      }
      if (direct) {
        out.emplace_back(x, y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Lattice::height() const {
  const int n = size();
  // Longest chain via DP over ids sorted by size of their down-set.
  std::vector<int> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y != x && leq_.contains(y, x)) {
        ++below[x];
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  std::vector<int> depth(n, 0);
  int best = 0;
  for (int x : order) {
    for (int y = 0; y < n; ++y) {
      if (y != x && leq_.contains(y, x)) {
        depth[x] = std::max(depth[x], depth[y] + 1);
      }
    }
    best = std::max(best, depth[x]);
  }
  return best;
}

bool is_isomorphism(const Lattice& a, const Lattice& b, const std::vector<ElementId>& forward) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(forward.size()) != n) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    if (forward[x] < 0 || forward[x] >= n || hit[forward[x]]) {
      return false;
    }
    hit[forward[x]] = true;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (forward[a.join(x, y)] != b.join(forward[x], forward[y]) ||
          forward[a.meet(x, y)] != b.meet(forward[x], forward[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

struct ElementProfile {
  int depth = 0;
  int lower_covers = 0;
  int upper_covers = 0;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles(const Lattice& L) {
  const int n = L.size();
  std::vector<ElementProfile> out(n);
  for (auto [x, y] : L.covers()) {
    ++out[y].lower_covers;
    ++out[x].upper_covers;
  }
  std::vector<int> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y != x && L.leq(y, x)) {
        ++below[x];
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  for (int x : order) {
    for (int y = 0; y < n; ++y) {
      if (y != x && L.leq(y, x)) {
        out[x].depth = std::max(out[x].depth, out[y].depth + 1);
      }
    }
  }
  return out;
}

bool extend(const Lattice& a, const Lattice& b, const std::vector<ElementProfile>& pa,
            const std::vector<ElementProfile>& pb, std::vector<ElementId>& map,
            std::vector<bool>& used, int x) {
  const int n = a.size();
  if (x == n) {
    return true;
  }
  for (int y = 0; y < n; ++y) {
    if (used[y] || pa[x] != pb[y]) {
      continue;
    }
    bool consistent = true;
    for (int prev = 0; prev < x; ++prev) {
      if (a.leq(prev, x) != b.leq(map[prev], y) || a.leq(x, prev) != b.leq(y, map[prev])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      continue;
    }
    map[x] = y;
    used[y] = true;
    if (extend(a, b, pa, pb, map, used, x + 1)) {
      return true;
    }
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<IsoMap> find_isomorphism(const Lattice& a, const Lattice& b) {
  const int n = a.size();
  if (b.size() != n) {
    return std::nullopt;
  }
  auto pa = profiles(a);
  auto pb = profiles(b);
  auto sa = pa;
  auto sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return std::nullopt;
  }
  std::vector<ElementId> map(n, -1);
  std::vector<bool> used(n, false);
  if (!extend(a, b, pa, pb, map, used, 0)) {
    return std::nullopt;
  }
  // An order isomorphism between lattices preserves join and meet, but the
  // search only tracked the order; re-check before handing the map out.
  if (!is_isomorphism(a, b, map)) {
    throw Error("internal error: order bijection is not a lattice isomorphism");
  }
  return IsoMap{std::move(map)};
}

std::optional<std::string> find_lattice_law_violation(const Lattice& L) {
  const int n = L.size();
  auto name = [&](int x) { return "'" + L.label(x) + "'"; };
  for (int x = 0; x < n; ++x) {
    if (L.join(x, x) != x) {
      return "join is not idempotent at " + name(x);
    }
    if (L.meet(x, x) != x) {
      return "meet is not idempotent at " + name(x);
    }
    for (int y = 0; y < n; ++y) {
      if (L.join(x, y) != L.join(y, x)) {
        return "join is not commutative at " + name(x) + ", " + name(y);
      }
      if (L.meet(x, y) != L.meet(y, x)) {
        return "meet is not commutative at " + name(x) + ", " + name(y);
      }
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x) {
        return "absorption fails at " + name(x) + ", " + name(y);
      }
      if (L.leq(x, y) != (L.join(x, y) == y)) {
        return "order does not match join at " + name(x) + ", " + name(y);
      }
      for (int z = 0; z < n; ++z) {
        if (L.join(L.join(x, y), z) != L.join(x, L.join(y, z))) {
          return "join is not associative at " + name(x) + ", " + name(y) + ", " + name(z);
        }
        if (L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z))) {
          return "meet is not associative at " + name(x) + ", " + name(y) + ", " + name(z);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace lattol
