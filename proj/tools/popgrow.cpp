#include <iostream>
#include <string>
#include <vector>

#include "popgrow/cli.hpp"

int main(int argc, char** argv) {
    return popgrow::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
