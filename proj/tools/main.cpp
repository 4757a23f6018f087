#include <iostream>
#include <vector>

#include "vircat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vircat::dispatch(args, std::cout, std::cerr);
}
