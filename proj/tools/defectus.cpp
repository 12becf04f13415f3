#include <iostream>
#include <vector>

#include "defectus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return defectus::run_cli(args, std::cout, std::cerr);
}
