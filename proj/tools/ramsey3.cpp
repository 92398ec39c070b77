#include <iostream>
#include <string>
#include <vector>

#include "ramsey3/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ramsey3::cli::run(args, std::cout, std::cerr);
}
