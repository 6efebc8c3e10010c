#include <iostream>

#include "valdim/cli.hpp"

int main(int argc, char** argv) { return valdim::run_cli(argc, argv, std::cout, std::cerr); }
