#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lattol/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"finite lattice tolerances, congruences, and block decompositions"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "check that a document describes a lattice");
  validate->add_option("file", validate_file, "lattice document")->required();

  std::string tolerances_file;
  lattol::cli::EnumerateOptions enumerate_options;
  auto* tolerances =
      app.add_subcommand("tolerances", "enumerate all tolerances (or congruences) of a lattice");
  tolerances->add_option("file", tolerances_file, "lattice document")->required();
  tolerances->add_flag("--congruences-only", enumerate_options.congruences_only,
                       "list only the transitive tolerances");
  tolerances->add_flag("--count-only", enumerate_options.count_only, "print just the count");
  tolerances->add_option("--cap", enumerate_options.cap,
                         "enumeration cap on the number of element pairs");

  std::string verify_file;
  lattol::cli::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "verify the theorems on a lattice document");
  verify->add_option("file", verify_file, "lattice document")->required();
  auto* relation_option =
      verify->add_option("--relation", verify_options.relation,
                         "named relation from the document (default: sweep all)");
  verify
      ->add_flag("--all-tolerances", verify_options.all_tolerances,
                 "sweep every enumerated relation (the default when --relation is absent)")
      ->excludes(relation_option);
  verify->add_option("--theorem", verify_options.theorem, "which statement to verify")
      ->check(CLI::IsMember({"1", "2", "2conv"}));
  verify->add_flag("--close", verify_options.close,
                   "close named generators under substitution before verifying");
  verify->add_option("--cap", verify_options.cap,
                     "enumeration cap on the number of element pairs");

  std::string dot_file;
  lattol::cli::DotOptions dot_options;
  auto* dot = app.add_subcommand("dot", "emit DOT diagrams");
  dot->add_option("file", dot_file, "lattice document")->required();
  dot->add_option("--relation", dot_options.relation, "named relation from the document");
  dot->add_option("--view", dot_options.view, "what to draw")
      ->check(CLI::IsMember({"hasse", "blocks", "block-lattice", "K"}));
  dot->add_flag("--close", dot_options.close,
                "close named generators under substitution first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : lattol::cli::kExitParse;
  }

  if (validate->parsed()) {
    return lattol::cli::cmd_validate(validate_file, std::cout, std::cerr);
  }
  if (tolerances->parsed()) {
    return lattol::cli::cmd_tolerances(tolerances_file, enumerate_options, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return lattol::cli::cmd_verify(verify_file, verify_options, std::cout, std::cerr);
  }
  return lattol::cli::cmd_dot(dot_file, dot_options, std::cout, std::cerr);
}
