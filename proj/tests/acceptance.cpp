// Runs every acceptance criterion and prints one line per criterion.
// Exit status 0 iff all pass (checks and runtime budget).

#include "hball/suites.hpp"

#include <cstdlib>
#include <iostream>

int main() {
    hball::RunOptions opts;
    opts.parallel = false;
    bool all = true;
    for (const auto& r : hball::run_acceptance(opts)) {
        std::cout << hball::criterion_line(r) << '\n';
        all = all && r.pass();
    }
    std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
