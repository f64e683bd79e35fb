#include <iostream>

#include "tra/cli/commands.hpp"

int main(int argc, char** argv) { return tra::cli::run(argc, argv, std::cout, std::cerr); }
