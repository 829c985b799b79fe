#include <iostream>

#include "cfm/cli.hpp"

int main(int argc, char** argv) {
    return cfm::run_cli(argc, argv, std::cout, std::cerr);
}
