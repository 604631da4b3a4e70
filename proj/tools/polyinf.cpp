#include <iostream>

#include "polyinf/cli.hpp"

int main(int argc, char** argv) { return polyinf::run_cli(argc, argv, std::cout, std::cerr); }
