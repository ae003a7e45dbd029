#include <iostream>
#include <string>
#include <vector>

#include "sgl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sgl::cli_dispatch(args, std::cout, std::cerr);
}
