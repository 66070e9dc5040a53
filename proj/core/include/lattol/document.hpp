#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lattol/report.hpp"
#include "lattol/tolerance.hpp"

namespace lattol {

struct NamedRelation {
  std::string name;
  /// Generator pairs over element labels, read symmetrically.
  std::vector<std::pair<std::string, std::string>> pairs;

  friend bool operator==(const NamedRelation&, const NamedRelation&) = default;
};

/// On-disk description of a lattice: a single JSON object with a name,
/// element labels, cover pairs, and optional named relation generators.
/// Labels must be distinct and every pair must reference declared labels;
/// violations are ParseError.
struct LatticeDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<NamedRelation> relations;

  static LatticeDocument parse(const std::string& text);
  static LatticeDocument load(const std::filesystem::path& path);
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  Lattice to_lattice() const;
  const NamedRelation* find_relation(std::string_view name) const;

  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

/// Turns named generators into a relation on L: always the symmetric
/// pairs plus the diagonal; with close, the full substitution closure
/// (tolerance_generated_by), so the result is guaranteed to be a
/// tolerance.
BinaryRelation materialize_relation(const Lattice& L, const NamedRelation& rel, bool close);

/// JSON rendering of a verification report.
std::string report_to_json(const VerificationReport& report);

}  // namespace lattol
