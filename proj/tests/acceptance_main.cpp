// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <iostream>

#include "g2micro/acceptance.hpp"

int main() {
    auto results = g2micro::acceptance::run_all(G2MICRO_DATA_DIR);
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    bool ok = g2micro::acceptance::all_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << std::endl;
    return ok ? 0 : 1;
}
