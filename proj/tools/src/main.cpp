#include <iostream>

#include "bfw_cli/cli.hpp"

int main(int argc, char** argv) { return bfw::cli::run(argc, argv, std::cout, std::cerr); }
