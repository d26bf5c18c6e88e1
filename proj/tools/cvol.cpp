#include <iostream>

#include "cvol/cli.hpp"

int main(int argc, char** argv) { return cvol::cli::run(argc, argv, std::cout, std::cerr); }
