#include <iostream>

#include "orbicy/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbicy::cli::run(args, std::cout, std::cerr);
}
