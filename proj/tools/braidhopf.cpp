#include "braidhopf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return braidhopf::run_cli(argc, argv, std::cout, std::cerr); }
