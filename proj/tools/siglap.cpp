#include <iostream>
#include <string>
#include <vector>

#include "siglap/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return siglap::cli::run(args, std::cout, std::cerr);
}
