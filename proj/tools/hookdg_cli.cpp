#include "hookdg/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hookdg::run_cli(argc, argv, std::cout, std::cerr);
}
