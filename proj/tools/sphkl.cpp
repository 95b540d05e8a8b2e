#include <iostream>

#include "sphkl/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sphkl::run_cli(args, std::cout, std::cerr);
}
