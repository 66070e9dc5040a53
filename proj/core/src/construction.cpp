#include "lattol/construction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

// Builds everything the constructor needs in one pass so the members can
// be initialized in declaration order without default states.
struct PairedParts {
  std::vector<std::pair<int, ElementId>> pairs;
  std::vector<ElementId> pair_index;
  Lattice lattice;
  BinaryRelation theta;
  std::vector<ElementId> phi_map;
};

PairedParts assemble(const BlockLattice& bl) {
  const Lattice& base = bl.base();
  const int n = base.size();
  const int m = bl.block_count();

  PairedParts parts;
  parts.pair_index.assign(static_cast<std::size_t>(m) * n, -1);
  for (int a = 0; a < m; ++a) {
    for (ElementId x : bl.block(a).members) {
      parts.pair_index[static_cast<std::size_t>(a) * n + x] =
          static_cast<ElementId>(parts.pairs.size());
      parts.pairs.emplace_back(a, x);
    }
  }
  const int nk = static_cast<int>(parts.pairs.size());

  std::vector<ElementId> join_table(static_cast<std::size_t>(nk) * nk);
  std::vector<ElementId> meet_table(static_cast<std::size_t>(nk) * nk);
  for (int k1 = 0; k1 < nk; ++k1) {
    auto [a, x] = parts.pairs[k1];
    for (int k2 = 0; k2 < nk; ++k2) {
      auto [b, y] = parts.pairs[k2];

      int jb = bl.join_index(a, b);
      ElementId jx = base.join(x, y);
      if (!bl.block(jb).contains(jx)) {
        throw ClosureViolation("join of '" + base.label(x) + "' in " + bl.block(a).label(base) +
                               " and '" + base.label(y) + "' in " + bl.block(b).label(base) +
                               " escapes the joined block " + bl.block(jb).label(base));
      }
      join_table[static_cast<std::size_t>(k1) * nk + k2] =
          parts.pair_index[static_cast<std::size_t>(jb) * n + jx];

      int mb = bl.meet_index(a, b);
      ElementId mx = base.meet(x, y);
      if (!bl.block(mb).contains(mx)) {
        throw ClosureViolation("meet of '" + base.label(x) + "' in " + bl.block(a).label(base) +
                               " and '" + base.label(y) + "' in " + bl.block(b).label(base) +
                               " escapes the met block " + bl.block(mb).label(base));
      }
      meet_table[static_cast<std::size_t>(k1) * nk + k2] =
          parts.pair_index[static_cast<std::size_t>(mb) * n + mx];
    }
  }

  // Derive the order from the componentwise join and push it through the
  // full validating constructor; the recomputed bounds must agree with
  // the componentwise tables.
  std::vector<std::string> labels(nk);
  BinaryRelation leq(nk);
  for (int k1 = 0; k1 < nk; ++k1) {
    labels[k1] = bl.block(parts.pairs[k1].first).label(base) + ":" +
                 base.label(parts.pairs[k1].second);
    for (int k2 = 0; k2 < nk; ++k2) {
      if (join_table[static_cast<std::size_t>(k1) * nk + k2] == k2) {
        leq.add(k1, k2);
      }
    }
  }
  parts.lattice = Lattice::from_leq(std::move(labels), std::move(leq));
  for (int k1 = 0; k1 < nk; ++k1) {
    for (int k2 = 0; k2 < nk; ++k2) {
      if (parts.lattice.join(k1, k2) != join_table[static_cast<std::size_t>(k1) * nk + k2] ||
          parts.lattice.meet(k1, k2) != meet_table[static_cast<std::size_t>(k1) * nk + k2]) {
        throw NotALattice("componentwise operations of the paired lattice are not the bounds of "
                          "its derived order",
                          k1, k2);
      }
    }
  }

  parts.theta = BinaryRelation(nk);
  for (int k1 = 0; k1 < nk; ++k1) {
    for (int k2 = 0; k2 < nk; ++k2) {
      if (parts.pairs[k1].first == parts.pairs[k2].first) {
        parts.theta.add(k1, k2);
      }
    }
  }
  if (!is_congruence(parts.lattice, parts.theta)) {
    throw NotACongruence("block-equality relation of the paired lattice is not a congruence");
  }

  parts.phi_map.reserve(static_cast<std::size_t>(nk));
  for (auto [a, x] : parts.pairs) {
    (void)a;
    parts.phi_map.push_back(x);
  }
  return parts;
}

Homomorphism make_phi(const Lattice& K, const Lattice& base, std::vector<ElementId> map) {
  Homomorphism phi(K, base, std::move(map));
  if (!is_surjective(phi)) {
    throw NotAHomomorphism("second projection of the paired lattice is not onto the base");
  }
  return phi;
}

}  // namespace

PairedLattice::PairedLattice(Lattice base, BinaryRelation rho)
    : block_lattice_(std::move(base), std::move(rho)) {
  PairedParts parts = assemble(block_lattice_);
  pairs_ = std::move(parts.pairs);
  pair_index_ = std::move(parts.pair_index);
  lattice_ = std::move(parts.lattice);
  theta_ = std::move(parts.theta);
  phi_.emplace(make_phi(lattice_, block_lattice_.base(), std::move(parts.phi_map)));
}

ElementId PairedLattice::index_of(int block, ElementId x) const {
  const int n = base().size();
  if (block < 0 || block >= block_lattice_.block_count() || x < 0 || x >= n) {
    throw IndexOutOfRange("pair (" + std::to_string(block) + ", " + std::to_string(x) +
                          ") out of range");
  }
  ElementId k = pair_index_[static_cast<std::size_t>(block) * n + x];
  if (k < 0) {
    throw IndexOutOfRange("element '" + base().label(x) + "' is not a member of block " +
                          block_lattice_.block(block).label(base()));
  }
  return k;
}

VerificationReport verify_theorem1(const Lattice& L, const BinaryRelation& rho) {
  if (!is_tolerance(L, rho)) {
    throw NotATolerance("theorem 1 applies to tolerances: " +
                        tolerance_violation_detail(L, rho));
  }
  PairedLattice paired(L, rho);
  const Lattice& K = paired.lattice();

  VerificationReport report;
  report.subject = "theorem 1";
  report.note = "|K| = " + std::to_string(K.size());

  ReportCheck lattice_check{"K is a lattice", true, "", {}};
  if (auto violation = find_lattice_law_violation(K)) {
    lattice_check.passed = false;
    lattice_check.detail = *violation;
  }
  report.checks.push_back(std::move(lattice_check));

  ReportCheck theta_check{"theta is a congruence on K", true, "", {}};
  if (!is_congruence(K, paired.theta())) {
    theta_check.passed = false;
    theta_check.detail = tolerance_violation_detail(K, paired.theta());
    if (theta_check.detail.empty()) {
      theta_check.detail = "relation is not transitive";
    }
  }
  report.checks.push_back(std::move(theta_check));

  report.checks.push_back(
      {"phi is a homomorphism", is_homomorphism(K, L, paired.phi().map()), "", {}});
  report.checks.push_back({"phi is onto L", is_surjective(paired.phi()), "", {}});

  ReportCheck image_check{"phi(theta) equals rho", true, "", {}};
  BinaryRelation image = image_relation(paired.phi(), paired.theta());
  if (!(image == rho)) {
    image_check.passed = false;
    for (int x = 0; x < L.size(); ++x) {
      for (int y = 0; y < L.size(); ++y) {
        if (image.contains(x, y) != rho.contains(x, y)) {
          image_check.witnesses.emplace_back(L.label(x), L.label(y));
        }
      }
    }
    image_check.detail = "image and rho differ on " +
                         std::to_string(image_check.witnesses.size()) + " pairs";
  }
  report.checks.push_back(std::move(image_check));
  return report;
}

}  // namespace lattol
