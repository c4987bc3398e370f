#include "hfactor/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hfactor::cli::run(argc, argv, std::cout, std::cerr);
}
