#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wzpi::run_cli(argc, argv, std::cout, std::cerr); }
