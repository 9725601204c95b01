#include <iostream>

#include "divcancel/cli.hpp"

int main(int argc, char** argv) { return divcancel::run_cli(argc, argv, std::cout, std::cerr); }
