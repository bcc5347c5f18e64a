#include <iostream>

#include "coxwalls/cli.hpp"

int main(int argc, char** argv) { return coxwalls::cli::run(argc, argv, std::cout, std::cerr); }
