#include "lattol/dot.hpp"

#include <sstream>

namespace lattol {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

void emit_nodes_and_edges(std::ostream& os, const Lattice& L) {
  for (int x = 0; x < L.size(); ++x) {
    os << "  n" << x << " [label=" << quoted(L.label(x)) << "];\n";
  }
  for (auto [x, y] : L.covers()) {
    os << "  n" << x << " -> n" << y << ";\n";
  }
}

}  // namespace

std::string dot_hasse(const Lattice& L, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  rankdir=BT;\n";
  emit_nodes_and_edges(os, L);
  os << "}\n";
  return os.str();
}

std::string dot_blocks(const BlockLattice& bl, std::string_view graph_name) {
  const Lattice& L = bl.base();
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  rankdir=BT;\n";

  // Real node of x lives in the first block containing it.
  std::vector<int> home(L.size(), -1);
  for (int x = 0; x < L.size(); ++x) {
    home[x] = bl.blocks_containing(x).front();
  }
  bool ghosts = false;
  for (int c = 0; c < bl.block_count(); ++c) {
    const Block& block = bl.block(c);
    os << "  subgraph cluster_" << c << " {\n";
    os << "    label=" << quoted(block.label(L)) << ";\n";
    for (ElementId x : block.members) {
      if (home[x] == c) {
        os << "    n" << x << " [label=" << quoted(L.label(x)) << "];\n";
      } else {
        ghosts = true;
        os << "    g" << c << "_" << x << " [label=" << quoted(L.label(x))
           << ", style=dashed];\n";
      }
    }
    os << "  }\n";
  }
  for (auto [x, y] : L.covers()) {
    os << "  n" << x << " -> n" << y << ";\n";
  }
  if (ghosts) {
    os << "  label=" << quoted("dashed nodes are ghost copies of elements shared between blocks")
       << ";\n";
    os << "  labelloc=\"b\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lattol
