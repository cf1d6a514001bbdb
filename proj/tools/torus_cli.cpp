#include <iostream>

#include "torus/cli.hpp"

int main(int argc, char** argv) { return torus::cli::run(argc, argv, std::cout, std::cerr); }
