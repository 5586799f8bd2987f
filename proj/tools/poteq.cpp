#include <iostream>
#include <string>
#include <vector>

#include "poteq/cli/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return poteq::cli::run(args, std::cin, std::cout, std::cerr);
}
