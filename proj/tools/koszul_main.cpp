#include <iostream>

#include "koszul/cli.hpp"

int main(int argc, char** argv) {
    return koszul::run_cli(argc, argv, std::cout, std::cerr);
}
