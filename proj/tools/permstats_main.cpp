#include <iostream>
#include <string>
#include <vector>

#include "permstats/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return permstats::run_cli(args, {std::cout, std::cerr});
}
