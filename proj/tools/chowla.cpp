#include "chowla/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return chowla::cli::run(argc, argv, std::cout, std::cerr); }
