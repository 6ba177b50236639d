#include <iostream>
#include <string>
#include <vector>

#include "gridfire/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gridfire::run_cli(args, std::cout, std::cerr);
}
