#include <iostream>

#include "cycpres/selftest.hpp"

// Runs the full acceptance suite; exits nonzero when any criterion fails.
int main() {
    const auto results = cycpres::run_acceptance_suite(std::cout);
    return cycpres::all_passed(results) ? 0 : 1;
}
