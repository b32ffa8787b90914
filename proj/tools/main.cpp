#include <iostream>
#include <string>
#include <vector>

#include "mpa/cli.hpp"

int main(int argc, char** argv) {
    return mpa::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
