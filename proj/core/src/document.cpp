#include "lattol/document.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "lattol/errors.hpp"

namespace lattol {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::pair<std::string, std::string>> parse_pair_list(const Json& j,
                                                                 const std::string& where) {
  if (!j.is_array()) {
    throw ParseError("'" + where + "' must be an array of label pairs");
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw ParseError("every entry of '" + where + "' must be a [label, label] pair");
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

void check_references(const LatticeDocument& doc) {
  std::unordered_set<std::string> declared;
  for (const auto& label : doc.elements) {
    if (!declared.insert(label).second) {
      throw ParseError("duplicate element label '" + label + "'");
    }
  }
  auto check_pair = [&](const std::pair<std::string, std::string>& p, const std::string& where) {
    if (!declared.count(p.first) || !declared.count(p.second)) {
      throw ParseError("pair ('" + p.first + "', '" + p.second + "') in " + where +
                       " references an undeclared label");
    }
  };
  for (const auto& p : doc.covers) {
    check_pair(p, "covers");
  }
  for (const auto& rel : doc.relations) {
    for (const auto& p : rel.pairs) {
      check_pair(p, "relation '" + rel.name + "'");
    }
  }
}

}  // namespace

LatticeDocument LatticeDocument::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("document must be a JSON object");
  }

  LatticeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw ParseError("'name' must be a string");
    }
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("elements")) {
    throw ParseError("document is missing 'elements'");
  }
  if (!j["elements"].is_array()) {
    throw ParseError("'elements' must be an array of labels");
  }
  for (const auto& item : j["elements"]) {
    if (!item.is_string()) {
      throw ParseError("every element label must be a string");
    }
    doc.elements.push_back(item.get<std::string>());
  }
  if (j.contains("covers")) {
    doc.covers = parse_pair_list(j["covers"], "covers");
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object()) {
      throw ParseError("'relations' must be an object mapping names to pair lists");
    }
    for (const auto& [key, value] : j["relations"].items()) {
      doc.relations.push_back({key, parse_pair_list(value, "relations." + key)});
    }
  }
  check_references(doc);
  return doc;
}

LatticeDocument LatticeDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string LatticeDocument::serialize() const {
  Json j;
  j["name"] = name;
  j["elements"] = elements;
  Json jcovers = Json::array();
  for (const auto& [lo, hi] : covers) {
    jcovers.push_back(Json::array({lo, hi}));
  }
  j["covers"] = std::move(jcovers);
  if (!relations.empty()) {
    Json jrel = Json::object();
    for (const auto& rel : relations) {
      Json jpairs = Json::array();
      for (const auto& [a, b] : rel.pairs) {
        jpairs.push_back(Json::array({a, b}));
      }
      jrel[rel.name] = std::move(jpairs);
    }
    j["relations"] = std::move(jrel);
  }
  return j.dump(2) + "\n";
}

void LatticeDocument::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write '" + path.string() + "'");
  }
  out << serialize();
}

Lattice LatticeDocument::to_lattice() const {
  return Lattice::from_covers(elements, covers);
}

const NamedRelation* LatticeDocument::find_relation(std::string_view name) const {
  for (const auto& rel : relations) {
    if (rel.name == name) {
      return &rel;
    }
  }
  return nullptr;
}

BinaryRelation materialize_relation(const Lattice& L, const NamedRelation& rel, bool close) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(rel.pairs.size());
  for (const auto& [a, b] : rel.pairs) {
    auto x = L.index_of(a);
    auto y = L.index_of(b);
    if (!x || !y) {
      throw UnknownLabel("relation '" + rel.name + "' references the undeclared label '" +
                         (!x ? a : b) + "'");
    }
    pairs.emplace_back(*x, *y);
  }
  if (close) {
    return tolerance_generated_by(L, pairs);
  }
  BinaryRelation out = BinaryRelation::diagonal(L.size());
  for (auto [x, y] : pairs) {
    out.add_symmetric(x, y);
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  Json j;
  j["subject"] = report.subject;
  if (!report.note.empty()) {
    j["note"] = report.note;
  }
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    if (!c.detail.empty()) {
      jc["detail"] = c.detail;
    }
    if (!c.witnesses.empty()) {
      Json w = Json::array();
      for (const auto& [a, b] : c.witnesses) {
        w.push_back(Json::array({a, b}));
      }
      jc["witnesses"] = std::move(w);
    }
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace lattol
