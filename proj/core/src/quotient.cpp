#include "lattol/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

std::string class_label(const Lattice& base, const std::vector<ElementId>& members) {
  std::ostringstream oss;
  oss << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) {
      oss << ",";
    }
    oss << base.label(members[i]);
  }
  oss << "}";
  return oss.str();
}

void require_congruence(const Lattice& L, const BinaryRelation& R, const char* role) {
  if (!is_congruence(L, R)) {
    std::string why = tolerance_violation_detail(L, R);
    if (why.empty()) {
      why = "relation is a tolerance but not transitive";
    }
    throw NotACongruence(std::string(role) + " must be a congruence: " + why);
  }
}

}  // namespace

QuotientLattice::QuotientLattice(Lattice base, BinaryRelation gamma)
    : base_(std::move(base)), gamma_(std::move(gamma)) {
  require_congruence(base_, gamma_, "gamma");
  const int n = base_.size();
  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) {
      continue;
    }
    // x is the least member of a fresh class; classes end up sorted by it.
    int id = static_cast<int>(classes_.size());
    std::vector<ElementId> members;
    for (int y = 0; y < n; ++y) {
      if (gamma_.contains(x, y)) {
        class_of_[y] = id;
        members.push_back(y);
      }
    }
    classes_.push_back(std::move(members));
  }

  const int m = static_cast<int>(classes_.size());
  std::vector<ElementId> join_table(static_cast<std::size_t>(m) * m);
  std::vector<ElementId> meet_table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      ElementId u = classes_[a].front();
      ElementId v = classes_[b].front();
      join_table[static_cast<std::size_t>(a) * m + b] = class_of_[base_.join(u, v)];
      meet_table[static_cast<std::size_t>(a) * m + b] = class_of_[base_.meet(u, v)];
    }
  }

  std::vector<std::string> labels(m);
  BinaryRelation leq(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = class_label(base_, classes_[a]);
    for (int b = 0; b < m; ++b) {
      if (join_table[static_cast<std::size_t>(a) * m + b] == b) {
        leq.add(a, b);
      }
    }
  }
  lattice_ = Lattice::from_leq(std::move(labels), std::move(leq));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (lattice_.join(a, b) != join_table[static_cast<std::size_t>(a) * m + b] ||
          lattice_.meet(a, b) != meet_table[static_cast<std::size_t>(a) * m + b]) {
        throw NotALattice("class operations disagree with the bounds of the quotient order", a,
                          b);
      }
    }
  }

  std::vector<ElementId> proj_map(class_of_.begin(), class_of_.end());
  proj_.emplace(base_, lattice_, std::move(proj_map));
  if (!is_surjective(*proj_)) {
    throw NotAHomomorphism("canonical projection is not onto the quotient");
  }
}

BinaryRelation kernel(const Homomorphism& phi) {
  const int n = phi.dom().size();
  BinaryRelation out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (phi(x) == phi(y)) {
        out.add(x, y);
      }
    }
  }
  if (!is_congruence(phi.dom(), out)) {
    throw NotACongruence("kernel of a homomorphism must be a congruence");
  }
  return out;
}

BinaryRelation alpha_over_gamma(const QuotientLattice& q, const BinaryRelation& alpha) {
  require_congruence(q.base(), alpha, "alpha");
  const int m = static_cast<int>(q.classes().size());
  BinaryRelation out(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      bool related = false;
      for (ElementId u : q.classes()[a]) {
        for (ElementId v : q.classes()[b]) {
          if (alpha.contains(u, v)) {
            related = true;
            break;
          }
        }
        if (related) {
          break;
        }
      }
      if (related) {
        out.add(a, b);
      }
    }
  }
  if (!(out == image_relation(q.projection(), alpha))) {
    throw Error("internal error: alpha/gamma disagrees with the projection image");
  }
  return out;
}

BinaryRelation alpha_over_gamma(const Lattice& L, const BinaryRelation& alpha,
                                const BinaryRelation& gamma) {
  QuotientLattice q(L, gamma);
  return alpha_over_gamma(q, alpha);
}

VerificationReport verify_theorem2_forward(const Lattice& L, const BinaryRelation& alpha,
                                           const BinaryRelation& gamma) {
  require_congruence(L, gamma, "gamma");
  require_congruence(L, alpha, "alpha");
  QuotientLattice q(L, gamma);
  BinaryRelation rel = alpha_over_gamma(q, alpha);

  VerificationReport report;
  report.subject = "theorem 2 (forward)";
  report.note = "|L/gamma| = " + std::to_string(q.lattice().size());

  ReportCheck tolerance_check{"alpha/gamma is a tolerance on L/gamma", true, "", {}};
  if (!is_tolerance(q.lattice(), rel)) {
    tolerance_check.passed = false;
    tolerance_check.detail = tolerance_violation_detail(q.lattice(), rel);
  }
  report.checks.push_back(std::move(tolerance_check));

  report.checks.push_back({"alpha/gamma equals the projection image of alpha",
                           rel == image_relation(q.projection(), alpha),
                           "",
                           {}});
  return report;
}

VerificationReport verify_theorem2_converse(const Lattice& K, const BinaryRelation& tau) {
  if (!is_tolerance(K, tau)) {
    throw NotATolerance("theorem 2 (converse) applies to tolerances: " +
                        tolerance_violation_detail(K, tau));
  }
  PairedLattice paired(K, tau);
  const Lattice& L = paired.lattice();
  const BinaryRelation& alpha = paired.theta();
  BinaryRelation gamma = kernel(paired.phi());
  QuotientLattice q(L, gamma);

  VerificationReport report;
  report.subject = "theorem 2 (converse)";
  report.note = "|L| = " + std::to_string(L.size()) +
                ", |L/gamma| = " + std::to_string(q.lattice().size());

  // psi sends the gamma-class of k to phi(k); all members agree because
  // gamma is exactly the kernel of phi.
  std::vector<ElementId> psi(q.classes().size());
  for (std::size_t c = 0; c < q.classes().size(); ++c) {
    psi[c] = paired.phi()(q.classes()[c].front());
  }
  bool psi_ok = is_isomorphism(q.lattice(), K, psi);
  if (!psi_ok && !find_isomorphism(q.lattice(), K)) {
    throw IsomorphismNotFound(
        "no isomorphism between L/gamma and K exists; the construction is broken");
  }
  report.checks.push_back({"psi: L/gamma -> K is a lattice isomorphism", psi_ok, "", {}});

  BinaryRelation quotient_rel = alpha_over_gamma(q, alpha);
  BinaryRelation transported(K.size());
  for (auto [a, b] : quotient_rel.pairs()) {
    transported.add(psi[a], psi[b]);
  }
  ReportCheck transport_check{"tau equals the psi-transport of alpha/gamma", true, "", {}};
  if (!(transported == tau)) {
    transport_check.passed = false;
    for (int x = 0; x < K.size(); ++x) {
      for (int y = 0; y < K.size(); ++y) {
        if (transported.contains(x, y) != tau.contains(x, y)) {
          transport_check.witnesses.emplace_back(K.label(x), K.label(y));
        }
      }
    }
    transport_check.detail = "transport and tau differ on " +
                             std::to_string(transport_check.witnesses.size()) + " pairs";
  }
  report.checks.push_back(std::move(transport_check));
  return report;
}

}  // namespace lattol
