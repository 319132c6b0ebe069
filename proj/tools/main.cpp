#include "deltarep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return deltarep::cli::run(argc, argv, std::cout, std::cerr); }
