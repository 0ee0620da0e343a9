#include <iostream>
#include <string>
#include <vector>

#include "warpband/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return warpband::cli::run(args, std::cout, std::cerr);
}
