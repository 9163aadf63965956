#include <iostream>

#include "modo_cli.hpp"

int main(int argc, char** argv) { return modo::cli::run(argc, argv, std::cout, std::cerr); }
