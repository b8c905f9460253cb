#include "ckyforms/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ckyforms::cli::run(argc, argv, std::cout, std::cerr); }
