#include <iostream>

#include "qsu2cli/cli.hpp"

int main(int argc, char** argv) { return qsu2::cli::run(argc, argv, std::cout, std::cerr); }
