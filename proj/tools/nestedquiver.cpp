#include <iostream>

#include "nestedquiver/cli.hpp"

int main(int argc, char** argv) { return nq::cli::run(argc, argv, std::cout, std::cerr); }
