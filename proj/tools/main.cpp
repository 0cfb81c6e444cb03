#include <iostream>

#include "onefactor/cli.hpp"

int main(int argc, char** argv) { return onefactor::cli::run(argc, argv, std::cout, std::cerr); }
