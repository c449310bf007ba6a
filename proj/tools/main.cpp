#include <iostream>

#include "berndt_cli/cli.hpp"

int main(int argc, char** argv) { return berndt::cli::main_entry(argc, argv, std::cout, std::cerr); }
