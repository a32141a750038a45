#include "interlace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return interlace::cli::main(argc, argv, std::cout, std::cerr); }
