#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace g2micro::cli {

// Runs one CLI invocation. Exit status: 0 success, 1 usage error, 2 fixture
// validation failure, 3 solver non-uniqueness.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace g2micro::cli
