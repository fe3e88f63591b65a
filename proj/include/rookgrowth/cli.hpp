#ifndef ROOKGROWTH_CLI_HPP_
#define ROOKGROWTH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "core.hpp"

namespace rookgrowth {

  //! Exit status: 0 success, 1 property violation or internal failure,
  //! 2 usage or validation error.
  int run_cli(int argc, char const* const* argv,
              std::istream& in, std::ostream& out, std::ostream& err);

  //! `args` excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::istream& in, std::ostream& out, std::ostream& err);

  //! "53476281" or "5,3,4,7,6,2,8,1".
  std::vector<int> parse_one_line(std::string const& text);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_CLI_HPP_
