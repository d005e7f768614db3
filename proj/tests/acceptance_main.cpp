// Runs every acceptance criterion and prints one pass/fail line per
// criterion. Exit code 0 only when all of them pass. An optional argument
// overrides the suite seed.

#include <cstdlib>
#include <iostream>

#include "kneser/acceptance.hpp"

int main(int argc, char** argv) {
    kneser::AcceptanceOptions opt;
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
    return kneser::print_acceptance(std::cout, opt) ? 0 : 1;
}
