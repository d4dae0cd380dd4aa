#include "monoclosure/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return monoclosure::cli::main_entry(argc, argv, std::cout, std::cerr); }
