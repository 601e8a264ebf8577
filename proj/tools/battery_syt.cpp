#include <iostream>
#include <string>
#include <vector>

#include "battery/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return battery::cli::run(args, std::cout, std::cerr);
}
