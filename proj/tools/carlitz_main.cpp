#include <iostream>

#include "carlitz/cli.hpp"

int main(int argc, char** argv) { return carlitz::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
