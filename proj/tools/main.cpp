#include <iostream>

#include "sbkd/cli.hpp"

int main(int argc, char** argv) { return sbkd::cli::run(argc, argv, std::cout, std::cerr); }
