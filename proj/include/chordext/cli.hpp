#pragma once

//
// ... Standard header files
//
#include <iosfwd>
#include <string>
#include <vector>

namespace chordext::cli {

  // Process exit codes.
  inline constexpr int exit_ok = 0;
  inline constexpr int exit_malformed = 2;
  inline constexpr int exit_infeasible = 3;
  inline constexpr int exit_too_large = 4;

  // Runs one command.  `args` excludes the program name.  The result (or
  // an {"error", "message"} document) goes to `out` as a single JSON
  // document; diagnostics go to `err`.
  int
  run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // end of namespace chordext::cli
