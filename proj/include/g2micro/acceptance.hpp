#pragma once

#include <string>
#include <vector>

namespace g2micro::acceptance {

struct Criterion {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the twelve acceptance checks against the bundled fixtures.
std::vector<Criterion> run_all(const std::string& fixtures_dir);

bool all_passed(const std::vector<Criterion>& results);

} // namespace g2micro::acceptance
