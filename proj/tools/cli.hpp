#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mclosure {

// Exit codes: 0 ok, 1 usage or internal error, 2 parse or structural error,
// 3 domain error, 4 unsupported input, 5 failed --check.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mclosure
