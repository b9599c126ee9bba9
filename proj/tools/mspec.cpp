#include <iostream>
#include <string>
#include <vector>

#include "mspec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mspec::run_cli(args, std::cout, std::cerr);
}
