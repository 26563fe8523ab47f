#include <iostream>
#include <string>
#include <vector>

#include "arcsin_bounds/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return asinb::cli::run(args, std::cout, std::cerr);
}
