#include "subhit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return subhit::run_cli(argc, argv, std::cout, std::cerr);
}
