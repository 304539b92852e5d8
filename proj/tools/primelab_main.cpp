#include <iostream>

#include "primelab/cli.hpp"

int main(int argc, char** argv) { return primelab::cli_main(argc, argv, std::cout, std::cerr); }
