#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lattol/tolerance.hpp"

namespace lattol::cli {

inline constexpr int kExitOk = 0;
/// A verification check failed or the document does not describe a lattice.
inline constexpr int kExitFailed = 1;
/// The document (or the request against it) could not be parsed.
inline constexpr int kExitParse = 2;
/// An exhaustive enumeration exceeded the cap.
inline constexpr int kExitTooLarge = 3;

struct EnumerateOptions {
  bool congruences_only = false;
  bool count_only = false;
  int cap = kDefaultEnumerationCap;
};

struct VerifyOptions {
  /// Named relation from the document; empty means sweep all enumerated
  /// relations (--all-tolerances).
  std::string relation;
  bool all_tolerances = false;
  /// "1", "2", or "2conv".
  std::string theorem = "1";
  /// Apply the full substitution closure to named generators.
  bool close = false;
  int cap = kDefaultEnumerationCap;
};

struct DotOptions {
  std::string relation;
  /// "hasse", "blocks", "block-lattice", or "K".
  std::string view = "hasse";
  bool close = false;
};

int cmd_validate(const std::filesystem::path& file, std::ostream& out, std::ostream& err);
int cmd_tolerances(const std::filesystem::path& file, const EnumerateOptions& options,
                   std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& file, const VerifyOptions& options,
               std::ostream& out, std::ostream& err);
int cmd_dot(const std::filesystem::path& file, const DotOptions& options, std::ostream& out,
            std::ostream& err);

}  // namespace lattol::cli
