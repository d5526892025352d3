#include <iostream>

#include "schubcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schubcalc::cli::run(args, std::cin, std::cout, std::cerr);
}
