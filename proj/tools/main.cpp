#include <iostream>

#include "theta/cli.hpp"

int main(int argc, char** argv)
{
    return theta::cli::run_cli(argc, argv, std::cout, std::cerr);
}
