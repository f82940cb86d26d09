#include <iostream>

#include "mtip/cli.hpp"

int main(int argc, char** argv) { return mtip::cli::run(argc, argv, std::cout, std::cerr); }
