#include <iostream>

#include "k3wall/cli.hpp"

int main(int argc, char** argv) { return k3wall::run_cli(argc, argv, std::cout, std::cerr); }
