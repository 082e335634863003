#include <iostream>

#include "purefield/cli.hpp"

int main(int argc, char** argv)
{
    return purefield::cli::run(argc, argv, std::cout, std::cerr);
}
