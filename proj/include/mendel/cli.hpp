#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mendel {

// Entry point shared by the mendel binary and the in-process CLI tests.
// Exit codes: 0 success, 1 invalid parameters / parse failure / bounds,
// 2 construction error, 3 property failure, 4 search budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mendel
