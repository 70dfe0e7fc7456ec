#include <iostream>

#include "ptosc/cli.hpp"

int main(int argc, char** argv) { return ptosc::cli::run(argc, argv, std::cout, std::cerr); }
