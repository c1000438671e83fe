#include <iostream>

#include "radnor/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return radnor::cli::run_cli(args, std::cout, std::cerr);
}
