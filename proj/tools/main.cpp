#include <iostream>
#include <vector>

#include "y2p/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return y2p::run_cli(std::move(args), std::cout, std::cerr);
}
