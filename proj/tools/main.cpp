#include <iostream>

#include "uppart/cli.hpp"

int main(int argc, char** argv) { return uppart::cli::run(argc, argv, std::cout, std::cerr); }
