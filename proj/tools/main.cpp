#include <iostream>

#include "stablelab/cli.hpp"

int main(int argc, char** argv) { return stablelab::run_cli(argc, argv, std::cout, std::cerr); }
