#include "septic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return septic::cli::run(argc, argv, std::cout, std::cerr); }
