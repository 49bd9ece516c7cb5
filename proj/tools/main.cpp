#include <iostream>

#include "splitquat/cli.hpp"

int main(int argc, char** argv) { return splitquat::run_cli(argc, argv, std::cout, std::cerr); }
