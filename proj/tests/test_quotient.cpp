#include <doctest.h>

#include "corpus.hpp"
#include "lattol/construction.hpp"
#include "lattol/errors.hpp"
#include "lattol/quotient.hpp"

using lattol::BinaryRelation;
using lattol::Homomorphism;
using lattol::Lattice;
using lattol::QuotientLattice;

namespace {

BinaryRelation partition_relation(int n, const std::vector<std::vector<int>>& classes) {
  BinaryRelation r(n);
  for (const auto& cls : classes) {
    for (int x : cls) {
      for (int y : cls) {
        r.add(x, y);
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("quotients by the trivial congruences") {
  Lattice L = Lattice::named("N5");
  SUBCASE("diagonal") {
    QuotientLattice q(L, BinaryRelation::diagonal(L.size()));
    CHECK(q.lattice().size() == L.size());
    CHECK(find_isomorphism(q.lattice(), L).has_value());
  }
  SUBCASE("full") {
    QuotientLattice q(L, BinaryRelation::full(L.size()));
    CHECK(q.lattice().size() == 1);
  }
}

TEST_CASE("collapsing the middle of a 4-chain gives a 3-chain") {
  Lattice L = Lattice::chain(4);
  BinaryRelation gamma = partition_relation(4, {{0}, {1, 2}, {3}});
  REQUIRE(lattol::is_congruence(L, gamma));
  QuotientLattice q(L, gamma);
  REQUIRE(q.classes().size() == 3);
  CHECK(q.classes()[0] == std::vector<int>{0});
  CHECK(q.classes()[1] == std::vector<int>{1, 2});
  CHECK(q.classes()[2] == std::vector<int>{3});
  CHECK(find_isomorphism(q.lattice(), Lattice::chain(3)).has_value());
  CHECK(q.lattice().label(1) == "{1,2}");
}

TEST_CASE("quotient rejects mere tolerances") {
  CHECK_THROWS_AS(QuotientLattice(corpus::chain3_oa1(), corpus::glued3()),
                  lattol::NotACongruence);
}

TEST_CASE("kernel") {
  Lattice c3 = corpus::chain3_oa1();
  SUBCASE("of the identity is the diagonal") {
    CHECK(lattol::kernel(Homomorphism::identity(c3)) == BinaryRelation::diagonal(3));
  }
  SUBCASE("of a constant map is everything") {
    Homomorphism constant(c3, Lattice::chain(1), {0, 0, 0});
    CHECK(lattol::kernel(constant) == BinaryRelation::full(3));
  }
  SUBCASE("of the worked-example phi") {
    lattol::PairedLattice paired(c3, corpus::glued3());
    BinaryRelation gamma = lattol::kernel(paired.phi());
    CHECK(gamma == partition_relation(4, {{0}, {1, 2}, {3}}));
  }
}

TEST_CASE("kernel of a quotient projection is the congruence itself") {
  for (const auto& [name, L] : corpus::enumerable()) {
    if (L.size() > 5) {
      continue;
    }
    CAPTURE(name);
    for (const auto& gamma : lattol::enumerate_congruences(L)) {
      QuotientLattice q(L, gamma);
      CHECK(lattol::kernel(q.projection()) == gamma);
    }
  }
}

TEST_CASE("alpha_over_gamma") {
  Lattice L = Lattice::chain(4);
  BinaryRelation gamma = partition_relation(4, {{0}, {1, 2}, {3}});
  BinaryRelation alpha = partition_relation(4, {{0, 1}, {2, 3}});
  REQUIRE(lattol::is_congruence(L, alpha));

  SUBCASE("the worked inverse example gives the glued tolerance") {
    BinaryRelation rel = lattol::alpha_over_gamma(L, alpha, gamma);
    BinaryRelation expected = BinaryRelation::diagonal(3);
    expected.add_symmetric(0, 1);
    expected.add_symmetric(1, 2);
    CHECK(rel == expected);
    CHECK(!rel.is_transitive());
  }
  SUBCASE("alpha = diagonal gives the diagonal") {
    CHECK(lattol::alpha_over_gamma(L, BinaryRelation::diagonal(4), gamma) ==
          BinaryRelation::diagonal(3));
  }
  SUBCASE("alpha = gamma gives the diagonal") {
    CHECK(lattol::alpha_over_gamma(L, gamma, gamma) == BinaryRelation::diagonal(3));
  }
  SUBCASE("a mere tolerance is rejected as alpha") {
    Lattice c3 = corpus::chain3_oa1();
    CHECK_THROWS_AS(
        lattol::alpha_over_gamma(c3, corpus::glued3(), BinaryRelation::diagonal(3)),
        lattol::NotACongruence);
  }
  SUBCASE("a mere tolerance is rejected as gamma") {
    Lattice c3 = corpus::chain3_oa1();
    CHECK_THROWS_AS(
        lattol::alpha_over_gamma(c3, BinaryRelation::diagonal(3), corpus::glued3()),
        lattol::NotACongruence);
  }
}

TEST_CASE("alpha_over_gamma equals the projection image") {
  for (const auto& [name, L] : corpus::enumerable()) {
    if (L.size() > 5) {
      continue;
    }
    CAPTURE(name);
    auto congruences = lattol::enumerate_congruences(L);
    for (const auto& gamma : congruences) {
      QuotientLattice q(L, gamma);
      for (const auto& alpha : congruences) {
        CHECK(lattol::alpha_over_gamma(q, alpha) ==
              lattol::image_relation(q.projection(), alpha));
      }
    }
  }
}

TEST_CASE("alpha containing gamma makes alpha/gamma transitive") {
  for (const auto& [name, L] : corpus::enumerable()) {
    if (L.size() > 5) {
      continue;
    }
    CAPTURE(name);
    auto congruences = lattol::enumerate_congruences(L);
    for (const auto& gamma : congruences) {
      QuotientLattice q(L, gamma);
      for (const auto& alpha : congruences) {
        if (gamma.subset_of(alpha)) {
          CHECK(lattol::alpha_over_gamma(q, alpha).is_transitive());
        }
      }
    }
  }
}

TEST_CASE("theorem 2 forward") {
  SUBCASE("the 4-chain example passes and is not transitive") {
    Lattice L = Lattice::chain(4);
    BinaryRelation gamma = partition_relation(4, {{0}, {1, 2}, {3}});
    BinaryRelation alpha = partition_relation(4, {{0, 1}, {2, 3}});
    auto report = lattol::verify_theorem2_forward(L, alpha, gamma);
    CHECK(report.passed());
    CHECK(!lattol::alpha_over_gamma(L, alpha, gamma).is_transitive());
  }
  SUBCASE("diagonal pair on anything") {
    for (const auto& [name, L] : corpus::all()) {
      CAPTURE(name);
      BinaryRelation diag = BinaryRelation::diagonal(L.size());
      CHECK(lattol::verify_theorem2_forward(L, diag, diag).passed());
    }
  }
  SUBCASE("every congruence pair of the boolean square") {
    Lattice L = Lattice::boolean_cube(2);
    auto congruences = lattol::enumerate_congruences(L);
    for (const auto& alpha : congruences) {
      for (const auto& gamma : congruences) {
        CHECK(lattol::verify_theorem2_forward(L, alpha, gamma).passed());
      }
    }
  }
  SUBCASE("non-congruences are rejected") {
    Lattice c3 = corpus::chain3_oa1();
    CHECK_THROWS_AS(
        lattol::verify_theorem2_forward(c3, corpus::glued3(), BinaryRelation::diagonal(3)),
        lattol::NotACongruence);
  }
}

TEST_CASE("theorem 2 converse") {
  SUBCASE("the glued tolerance of the 3-chain") {
    Lattice K = corpus::chain3_oa1();
    auto report = lattol::verify_theorem2_converse(K, corpus::glued3());
    CHECK(report.passed());
    CHECK(report.note.find("|L| = 4") != std::string::npos);
  }
  SUBCASE("the diagonal on anything") {
    for (const auto& [name, K] : corpus::all()) {
      CAPTURE(name);
      auto report = lattol::verify_theorem2_converse(K, BinaryRelation::diagonal(K.size()));
      CHECK(report.passed());
    }
  }
  SUBCASE("the full relation on M3") {
    Lattice K = Lattice::named("M3");
    auto report = lattol::verify_theorem2_converse(K, BinaryRelation::full(K.size()));
    CHECK(report.passed());
  }
  SUBCASE("non-tolerances are rejected") {
    Lattice c3 = corpus::chain3_oa1();
    BinaryRelation ends = BinaryRelation::diagonal(3);
    ends.add_symmetric(0, 2);
    CHECK_THROWS_AS(lattol::verify_theorem2_converse(c3, ends), lattol::NotATolerance);
  }
}
