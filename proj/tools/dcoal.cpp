#include <dcoal/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return dcoal::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
