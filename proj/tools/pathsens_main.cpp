#include <iostream>

#include "pathsens/cli.hpp"

int main(int argc, char** argv) { return pathsens::run_cli(argc, argv, std::cout, std::cerr); }
