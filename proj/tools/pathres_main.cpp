#include "pathres/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pathres::run_cli(argc, argv, std::cout, std::cerr); }
