#include <iostream>
#include <string>
#include <vector>

#include "akb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return akb::run_cli(args, std::cout, std::cerr);
}
