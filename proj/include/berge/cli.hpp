#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berge {

// Exit status: 0 computed, 1 a verification found a theorem-contradicting
// exception where none was allowed, 2 usage/parse/guard errors.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace berge
