#include <iostream>

#include "apvdw/cli.hpp"

int main(int argc, char** argv)
{
    return apvdw::cli_main(argc, argv, std::cout, std::cerr);
}
