#include "tempus/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tempus::run_cli(argc, argv, std::cout, std::cerr); }
