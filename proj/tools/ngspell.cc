#include <iostream>

#include "ngspell/cli.h"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return ngspell::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
