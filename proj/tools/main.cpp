#include <iostream>

#include "jdiv/cli.hpp"

int main(int argc, char** argv) { return jdiv::cli::run(argc, argv, std::cout, std::cerr); }
