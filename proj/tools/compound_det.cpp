#include <iostream>

#include "cdet/cli.hpp"

int main(int argc, char** argv) { return cdet::run_cli(argc, argv, std::cout, std::cerr); }
