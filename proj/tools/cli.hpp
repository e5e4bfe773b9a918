// Entry point of the bandsmp command-line tool, separate from main so the
// tests can drive it in-process.

#ifndef BANDSMP_TOOLS_CLI_HPP_
#define BANDSMP_TOOLS_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace bandsmp::cli {

  inline constexpr int exit_member  = 0;
  inline constexpr int exit_negative = 1;
  inline constexpr int exit_error   = 2;
  inline constexpr int exit_usage   = 64;

  //! Runs one invocation; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace bandsmp::cli

#endif  // BANDSMP_TOOLS_CLI_HPP_
