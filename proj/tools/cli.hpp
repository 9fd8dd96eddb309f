#pragma once

#include <string>
#include <vector>

namespace minvar::cli {

// Entry point shared by the binary and the tests. Exit codes: 0 success or
// proved, 1 refuted / unequal, 2 usage error, 3 resource budget exceeded.
int run(const std::vector<std::string>& args);

}  // namespace minvar::cli
