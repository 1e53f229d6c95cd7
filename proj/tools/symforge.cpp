#include <iostream>

#include "symforge/cli.hpp"

int main(int argc, char** argv)
{
    return symforge::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
