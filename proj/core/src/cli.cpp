#include "lattol/cli.hpp"

#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "lattol/construction.hpp"
#include "lattol/document.hpp"
#include "lattol/dot.hpp"
#include "lattol/errors.hpp"
#include "lattol/quotient.hpp"

namespace lattol::cli {

namespace {

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

void print_report(std::ostream& out, const std::string& context,
                  const VerificationReport& report) {
  out << (report.passed() ? "PASS" : "FAIL") << " " << report.subject;
  if (!context.empty()) {
    out << " [" << context << "]";
  }
  if (!report.note.empty()) {
    out << ": " << report.note;
  }
  out << "\n";
  if (report.passed()) {
    return;
  }
  for (const auto& check : report.checks) {
    if (check.passed) {
      continue;
    }
    out << "  check failed: " << check.name;
    if (!check.detail.empty()) {
      out << " (" << check.detail << ")";
    }
    if (!check.witnesses.empty()) {
      out << " witnesses:";
      std::size_t shown = 0;
      for (const auto& [a, b] : check.witnesses) {
        if (shown++ == 8) {
          out << " ...";
          break;
        }
        out << " (" << a << "," << b << ")";
      }
    }
    out << "\n";
  }
}

struct SelectedRelation {
  std::string descriptor;  // "glued" for named relations, "#3 {(0,a)}" in sweeps
  BinaryRelation relation;
};

/// Relations to run a verification over: the named one, or the whole
/// enumerated family.
std::vector<SelectedRelation> select_relations(const LatticeDocument& doc, const Lattice& L,
                                               const std::string& name, bool close, int cap,
                                               bool congruences) {
  std::vector<SelectedRelation> out;
  if (!name.empty()) {
    const NamedRelation* named = doc.find_relation(name);
    if (!named) {
      throw ParseError("document has no relation named '" + name + "'");
    }
    out.push_back({name, materialize_relation(L, *named, close)});
    return out;
  }
  auto family = congruences ? enumerate_congruences(L, cap) : enumerate_tolerances(L, cap);
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.push_back({"#" + std::to_string(i) + " " + format_pairs(L, family[i]),
                   std::move(family[i])});
  }
  return out;
}

}  // namespace

int cmd_validate(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    LatticeDocument doc = LatticeDocument::load(file);
    Lattice L = doc.to_lattice();
    out << "lattice: " << L.size() << " elements\n";
    out << "height: " << L.height() << "\n";
    out << "ok\n";
    return kExitOk;
  });
}

int cmd_tolerances(const std::filesystem::path& file, const EnumerateOptions& options,
                   std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    LatticeDocument doc = LatticeDocument::load(file);
    Lattice L = doc.to_lattice();
    auto family = options.congruences_only ? enumerate_congruences(L, options.cap)
                                           : enumerate_tolerances(L, options.cap);
    if (options.count_only) {
      out << family.size() << "\n";
      return kExitOk;
    }
    out << family.size() << (options.congruences_only ? " congruences" : " tolerances") << "\n";
    for (const auto& rel : family) {
      out << format_pairs(L, rel) << "\n";
    }
    return kExitOk;
  });
}

int cmd_verify(const std::filesystem::path& file, const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, [&] {
    LatticeDocument doc = LatticeDocument::load(file);
    Lattice L = doc.to_lattice();
    bool all_passed = true;

    if (options.theorem == "1" || options.theorem == "2conv") {
      auto selected = select_relations(doc, L, options.relation, options.close, options.cap,
                                       /*congruences=*/false);
      for (const auto& [descriptor, rho] : selected) {
        if (!is_tolerance(L, rho)) {
          out << "FAIL theorem " << options.theorem << " [rho=" << descriptor
              << "]: not a tolerance: " << tolerance_violation_detail(L, rho) << "\n";
          all_passed = false;
          continue;
        }
        VerificationReport report = options.theorem == "1" ? verify_theorem1(L, rho)
                                                           : verify_theorem2_converse(L, rho);
        print_report(out, "rho=" + descriptor, report);
        all_passed = all_passed && report.passed();
      }
    } else if (options.theorem == "2") {
      // The named relation (or each enumerated congruence) plays alpha;
      // gamma always sweeps the whole congruence family.
      auto alphas = select_relations(doc, L, options.relation, options.close, options.cap,
                                     /*congruences=*/true);
      auto gammas = enumerate_congruences(L, options.cap);
      for (const auto& [descriptor, alpha] : alphas) {
        if (!is_congruence(L, alpha)) {
          out << "FAIL theorem 2 [alpha=" << descriptor << "]: not a congruence\n";
          all_passed = false;
          continue;
        }
        for (std::size_t j = 0; j < gammas.size(); ++j) {
          std::string context = "alpha=" + descriptor + ", gamma=#" + std::to_string(j) + " " +
                                format_pairs(L, gammas[j]);
          VerificationReport report = verify_theorem2_forward(L, alpha, gammas[j]);
          print_report(out, context, report);
          all_passed = all_passed && report.passed();
        }
      }
    } else {
      throw ParseError("unknown theorem '" + options.theorem + "' (expected 1, 2, or 2conv)");
    }
    return all_passed ? kExitOk : kExitFailed;
  });
}

int cmd_dot(const std::filesystem::path& file, const DotOptions& options, std::ostream& out,
            std::ostream& err) {
  return run_guarded(err, [&] {
    LatticeDocument doc = LatticeDocument::load(file);
    Lattice L = doc.to_lattice();
    const std::string graph_name = doc.name.empty() ? options.view : doc.name;

    if (options.view == "hasse") {
      out << dot_hasse(L, graph_name);
      return kExitOk;
    }
    if (options.relation.empty()) {
      throw ParseError("view '" + options.view + "' needs --relation");
    }
    const NamedRelation* named = doc.find_relation(options.relation);
    if (!named) {
      throw ParseError("document has no relation named '" + options.relation + "'");
    }
    BinaryRelation rho = materialize_relation(L, *named, options.close);

    if (options.view == "blocks") {
      out << dot_blocks(BlockLattice(L, rho), graph_name);
    } else if (options.view == "block-lattice") {
      out << dot_hasse(BlockLattice(L, rho).lattice(), graph_name);
    } else if (options.view == "K") {
      out << dot_hasse(PairedLattice(L, rho).lattice(), graph_name);
    } else {
      throw ParseError("unknown view '" + options.view +
                       "' (expected hasse, blocks, block-lattice, or K)");
    }
    return kExitOk;
  });
}

}  // namespace lattol::cli
