#include "berge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return berge::cli_run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
