#include <iostream>
#include <string>
#include <vector>

#include "qhs/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhs::run(args, std::cout, std::cerr);
}
