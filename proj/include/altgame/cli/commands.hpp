#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altgame::cli {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace altgame::cli
