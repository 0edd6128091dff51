#include <iostream>
#include <string>
#include <vector>

#include "menagerie/harness.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return menagerie::harness::run_cli(args, std::cout, std::cerr);
}
