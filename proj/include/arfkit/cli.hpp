#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arfkit/semigroup.hpp"

namespace arfkit::cli {

  enum exit_code : int { success = 0, check_failed = 1, invalid_input = 2 };

  struct CliInvocation {
    std::string              command;
    std::vector<value_type>  gens;
    bool                     json      = false;
    bool                     unicode   = false;
    value_type               max_genus = 0;
    std::string              out;  // empty means standard output
    unsigned                 jobs = 1;
    std::vector<std::string> checks;
  };

  //! Executes a parsed invocation.  Returns 0 on success, 1 when a check or
  //! audit failed, 2 on invalid input.
  int run(CliInvocation const& inv, std::ostream& out, std::ostream& err);

  //! Parses command-line arguments (argv[0] included) and runs them.
  int main(std::vector<std::string> const& args,
           std::ostream&                   out,
           std::ostream&                   err);

}  // namespace arfkit::cli
