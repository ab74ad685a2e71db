#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return rolecol::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
