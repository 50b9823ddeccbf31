#include <iostream>

#include "ptreg/cli.hpp"

int main(int argc, char** argv) { return ptreg::cli::run(argc, argv, std::cout, std::cerr); }
