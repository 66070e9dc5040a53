#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "lattol/construction.hpp"
#include "lattol/errors.hpp"

using lattol::BinaryRelation;
using lattol::Lattice;
using lattol::PairedLattice;

TEST_CASE("the paired lattice of the glued 3-chain tolerance is the 4-chain") {
  Lattice L = corpus::chain3_oa1();
  PairedLattice paired(L, corpus::glued3());
  const Lattice& K = paired.lattice();

  REQUIRE(K.size() == 4);
  CHECK(K.label(0) == "{0,a}:0");
  CHECK(K.label(1) == "{0,a}:a");
  CHECK(K.label(2) == "{a,1}:a");
  CHECK(K.label(3) == "{a,1}:1");
  // A total order: k0 < k1 < k2 < k3.
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(K.leq(x, y) == (x <= y));
    }
  }

  // theta has the two block classes {k0,k1} and {k2,k3}.
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(paired.theta().contains(x, y) == (x / 2 == y / 2));
    }
  }

  CHECK(paired.phi().map() == std::vector<int>{0, 1, 1, 2});
  CHECK(lattol::image_relation(paired.phi(), paired.theta()) == corpus::glued3());
}

TEST_CASE("pair bookkeeping") {
  Lattice L = corpus::chain3_oa1();
  PairedLattice paired(L, corpus::glued3());
  CHECK(paired.block_of(2) == 1);
  CHECK(paired.element_of(2) == 1);
  CHECK(paired.index_of(1, 1) == 2);
  CHECK_THROWS_AS(paired.index_of(0, 2), lattol::IndexOutOfRange);
  CHECK_THROWS_AS(paired.index_of(5, 0), lattol::IndexOutOfRange);
}

TEST_CASE("degenerate tolerances") {
  Lattice L = Lattice::named("M3");
  SUBCASE("diagonal: K is a copy of L and phi is an isomorphism") {
    PairedLattice paired(L, BinaryRelation::diagonal(L.size()));
    CHECK(paired.lattice().size() == L.size());
    CHECK(find_isomorphism(paired.lattice(), L).has_value());
    CHECK(paired.theta() == BinaryRelation::diagonal(L.size()));
    CHECK(is_isomorphism(paired.lattice(), L, paired.phi().map()));
  }
  SUBCASE("full relation: one block, theta is everything") {
    PairedLattice paired(L, BinaryRelation::full(L.size()));
    CHECK(paired.lattice().size() == L.size());
    CHECK(find_isomorphism(paired.lattice(), L).has_value());
    CHECK(paired.theta() == BinaryRelation::full(L.size()));
  }
}

TEST_CASE("construction requires a tolerance") {
  Lattice L = corpus::chain3_oa1();
  BinaryRelation ends = BinaryRelation::diagonal(3);
  ends.add_symmetric(0, 2);
  CHECK_THROWS_AS(PairedLattice(L, ends), lattol::NotATolerance);
  CHECK_THROWS_AS(lattol::verify_theorem1(L, ends), lattol::NotATolerance);
}

TEST_CASE("the paired lattice size is the sum of the block sizes") {
  for (const auto& [name, L] : corpus::enumerable()) {
    if (L.size() > 5) {
      continue;
    }
    CAPTURE(name);
    for (const auto& rho : lattol::enumerate_tolerances(L)) {
      PairedLattice paired(L, rho);
      std::size_t expected = 0;
      for (const auto& block : paired.block_lattice().blocks()) {
        expected += block.members.size();
      }
      CHECK(static_cast<std::size_t>(paired.lattice().size()) == expected);

      // phi restricted to a theta class is injective onto its block.
      for (int b = 0; b < paired.block_lattice().block_count(); ++b) {
        std::vector<int> image;
        for (int k = 0; k < paired.lattice().size(); ++k) {
          if (paired.block_of(k) == b) {
            image.push_back(paired.phi()(k));
          }
        }
        std::sort(image.begin(), image.end());
        CHECK(image == paired.block_lattice().block(b).members);
      }
    }
  }
}

TEST_CASE("for congruences the paired lattice reassembles the base") {
  for (const auto& [name, L] : corpus::enumerable()) {
    if (L.size() > 5) {
      continue;
    }
    CAPTURE(name);
    for (const auto& gamma : lattol::enumerate_congruences(L)) {
      PairedLattice paired(L, gamma);
      CHECK(paired.lattice().size() == L.size());
      CHECK(find_isomorphism(paired.lattice(), L).has_value());
    }
  }
}

TEST_CASE("verify_theorem1 reports") {
  Lattice L = corpus::chain3_oa1();
  SUBCASE("the worked example passes every check") {
    auto report = lattol::verify_theorem1(L, corpus::glued3());
    CHECK(report.passed());
    CHECK(report.note == "|K| = 4");
    REQUIRE(report.find("phi(theta) equals rho") != nullptr);
    CHECK(report.find("phi(theta) equals rho")->passed);
    CHECK(report.find("K is a lattice") != nullptr);
    CHECK(report.find("theta is a congruence on K") != nullptr);
    CHECK(report.find("phi is a homomorphism") != nullptr);
    CHECK(report.find("phi is onto L") != nullptr);
  }
  SUBCASE("diagonal and full pass on every corpus lattice") {
    for (const auto& [name, lattice] : corpus::all()) {
      CAPTURE(name);
      CHECK(lattol::verify_theorem1(lattice, BinaryRelation::diagonal(lattice.size())).passed());
      CHECK(lattol::verify_theorem1(lattice, BinaryRelation::full(lattice.size())).passed());
    }
  }
}
