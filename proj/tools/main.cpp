#include <iostream>

#include "pidft/cli.hpp"

int main(int argc, char** argv) { return pidft::main_entry(argc, argv, std::cout, std::cerr); }
