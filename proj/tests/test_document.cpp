#include <doctest.h>

#include "corpus.hpp"
#include "dot_validator.hpp"
#include "lattol/blocks.hpp"
#include "lattol/construction.hpp"
#include "lattol/document.hpp"
#include "lattol/dot.hpp"
#include "lattol/errors.hpp"

using lattol::BinaryRelation;
using lattol::Lattice;
using lattol::LatticeDocument;

namespace {

const char* kChain3Doc = R"({
  "name": "chain3",
  "elements": ["0", "a", "1"],
  "covers": [["0", "a"], ["a", "1"]],
  "relations": {
    "glued": [["0", "a"], ["a", "1"]],
    "top": [["0", "1"]]
  }
})";

}  // namespace

TEST_CASE("documents parse into their fields") {
  LatticeDocument doc = LatticeDocument::parse(kChain3Doc);
  CHECK(doc.name == "chain3");
  CHECK(doc.elements == std::vector<std::string>{"0", "a", "1"});
  REQUIRE(doc.covers.size() == 2);
  REQUIRE(doc.relations.size() == 2);
  CHECK(doc.relations[0].name == "glued");
  CHECK(doc.relations[1].name == "top");
  CHECK(doc.find_relation("glued") != nullptr);
  CHECK(doc.find_relation("nope") == nullptr);
}

TEST_CASE("serialize then parse is the identity") {
  LatticeDocument doc = LatticeDocument::parse(kChain3Doc);
  LatticeDocument again = LatticeDocument::parse(doc.serialize());
  CHECK(again == doc);
  // Serialization itself must be a fixpoint for determinism.
  CHECK(again.serialize() == doc.serialize());

  // Relation order is part of the document and must survive, even out of
  // alphabetical order.
  LatticeDocument reordered = doc;
  std::swap(reordered.relations[0], reordered.relations[1]);
  CHECK(LatticeDocument::parse(reordered.serialize()) == reordered);
  CHECK(!(LatticeDocument::parse(reordered.serialize()) == doc));
}

TEST_CASE("parse failures") {
  CHECK_THROWS_AS(LatticeDocument::parse("not json"), lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse("[1,2]"), lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse(R"({"covers": []})"), lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse(R"({"elements": ["a", "a"]})"), lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse(R"({"elements": ["a"], "covers": [["a", "z"]]})"),
                  lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse(R"({"elements": ["a"], "covers": [["a"]]})"),
                  lattol::ParseError);
  CHECK_THROWS_AS(
      LatticeDocument::parse(R"({"elements": ["a"], "relations": {"r": [["a", "z"]]}})"),
      lattol::ParseError);
  CHECK_THROWS_AS(LatticeDocument::parse(R"({"elements": [1, 2]})"), lattol::ParseError);
}

TEST_CASE("documents load and save through files") {
  auto path = std::filesystem::temp_directory_path() / "lattol_doc_roundtrip.json";
  LatticeDocument doc = LatticeDocument::parse(kChain3Doc);
  doc.save(path);
  CHECK(LatticeDocument::load(path) == doc);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(LatticeDocument::load(path), lattol::ParseError);
}

TEST_CASE("materializing named relations") {
  LatticeDocument doc = LatticeDocument::parse(kChain3Doc);
  Lattice L = doc.to_lattice();

  SUBCASE("generators are read symmetrically with the diagonal") {
    BinaryRelation glued = materialize_relation(L, *doc.find_relation("glued"), false);
    CHECK(glued == corpus::glued3());
  }
  SUBCASE("without closure a raw relation may fail to be a tolerance") {
    BinaryRelation raw = materialize_relation(L, *doc.find_relation("top"), false);
    CHECK(!lattol::is_tolerance(L, raw));
  }
  SUBCASE("with closure the generators produce a tolerance") {
    BinaryRelation closed = materialize_relation(L, *doc.find_relation("top"), true);
    CHECK(closed == BinaryRelation::full(3));
    CHECK(lattol::is_tolerance(L, closed));
  }
}

TEST_CASE("report JSON carries the checks") {
  Lattice L = corpus::chain3_oa1();
  auto report = lattol::verify_theorem1(L, corpus::glued3());
  std::string json = lattol::report_to_json(report);
  CHECK(json.find("\"subject\": \"theorem 1\"") != std::string::npos);
  CHECK(json.find("\"passed\": true") != std::string::npos);
  CHECK(json.find("phi(theta) equals rho") != std::string::npos);
}

TEST_CASE("hasse DOT output") {
  std::string dot = lattol::dot_hasse(Lattice::chain(2), "two");
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  std::string error;
  CHECK_MESSAGE(dotcheck::is_valid_dot(dot, &error), error);
}

TEST_CASE("blocks DOT output uses clusters and ghosts") {
  Lattice L = corpus::chain3_oa1();
  lattol::BlockLattice bl(L, corpus::glued3());
  std::string dot = lattol::dot_blocks(bl, "glued");
  std::string error;
  CHECK_MESSAGE(dotcheck::is_valid_dot(dot, &error), error);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  // The shared element a appears once for real and once dashed.
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("ghost") != std::string::npos);
}

TEST_CASE("every view of the worked example is valid DOT") {
  Lattice L = corpus::chain3_oa1();
  BinaryRelation glued = corpus::glued3();
  std::string error;

  CHECK_MESSAGE(dotcheck::is_valid_dot(lattol::dot_hasse(L, "chain3"), &error), error);
  lattol::BlockLattice bl(L, glued);
  CHECK_MESSAGE(dotcheck::is_valid_dot(lattol::dot_blocks(bl, "chain3"), &error), error);
  std::string bl_dot = lattol::dot_hasse(bl.lattice(), "blocks");
  CHECK_MESSAGE(dotcheck::is_valid_dot(bl_dot, &error), error);
  // Two nodes, one edge.
  CHECK(bl_dot.find("n0 [") != std::string::npos);
  CHECK(bl_dot.find("n1 [") != std::string::npos);
  CHECK(bl_dot.find("n2") == std::string::npos);
  CHECK(bl_dot.find("n0 -> n1;") != std::string::npos);
  lattol::PairedLattice paired(L, glued);
  std::string k_dot = lattol::dot_hasse(paired.lattice(), "K");
  CHECK_MESSAGE(dotcheck::is_valid_dot(k_dot, &error), error);
  CHECK(k_dot.find("{0,a}:0") != std::string::npos);
  CHECK(k_dot.find("{a,1}:1") != std::string::npos);
}

TEST_CASE("the DOT validator itself rejects garbage") {
  CHECK(!dotcheck::is_valid_dot("graph { }"));
  CHECK(!dotcheck::is_valid_dot("digraph {"));
  CHECK(!dotcheck::is_valid_dot("digraph { n0 -> ; }"));
  CHECK(!dotcheck::is_valid_dot("digraph { } trailing"));
  CHECK(dotcheck::is_valid_dot("digraph \"x\" { a; b; a -> b [label=\"e\"]; }"));
}
