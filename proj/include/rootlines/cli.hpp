#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rootlines/io.hpp"

namespace rootlines {

struct Check {
  std::string name;
  bool ok = false;
  std::string expected;
  std::string computed;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool ok() const;
  /// Elapsed times are left out unless asked for, so the report is byte-stable.
  json to_json(bool timings = false) const;
  std::string text(bool timings = false) const;
};

/// The acceptance suite, in a fixed order. `jobs` is passed to the Jacobi
/// checks (0 = hardware concurrency).
VerificationReport verify_all(unsigned jobs = 0);

/// Runs one command line (argv[0] is the program name). Returns 0 on
/// success, 1 when a requested verification fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootlines
