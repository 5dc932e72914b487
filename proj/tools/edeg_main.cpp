#include <iostream>

#include "edeg/cli.hpp"

int main(int argc, char** argv) { return edeg::cli::run(argc, argv, std::cout, std::cerr); }
