#include <iostream>

#include "wittpolar/cli.hpp"

int main(int argc, char** argv) { return wittpolar::cli::run(argc, argv, std::cout, std::cerr); }
