#include <iostream>

#include "qsign_cli/cli.hpp"

int main(int argc, char** argv) { return qsign::cli::run(argc, argv, std::cout, std::cerr); }
