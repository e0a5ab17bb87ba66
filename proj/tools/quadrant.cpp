#include "quadrant/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return quadrant::cli::run(argc, argv, std::cout, std::cerr); }
