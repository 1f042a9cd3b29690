#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace g2micro {

// Raised when a bundled data file is missing or fails validation; the CLI
// maps it to exit status 2.
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tab-separated rows; '#' lines and blank lines are skipped.
std::vector<std::vector<std::string>> read_tsv(const std::string& path);

long long to_int(const std::string& s, const std::string& what);

} // namespace g2micro
