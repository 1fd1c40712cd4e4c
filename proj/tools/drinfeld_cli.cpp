#include <iostream>

#include "drinfeld/cli.hpp"

int main(int argc, char** argv) { return drinfeld::run_cli(argc, argv, std::cout, std::cerr); }
