#include <iostream>

#include "ygraph/cli.hpp"

int main(int argc, char** argv) { return ygraph::run_cli(argc, argv, std::cout, std::cerr); }
