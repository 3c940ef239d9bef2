#include <iostream>

#include "efb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return efb::run_cli(args, std::cin, std::cout, std::cerr);
}
