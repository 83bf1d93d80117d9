#include <iostream>

#include "posmap/cli.hpp"

int main(int argc, char** argv) { return posmap::cli::run(argc, argv, std::cout, std::cerr); }
