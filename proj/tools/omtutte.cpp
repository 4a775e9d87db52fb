#include <iostream>

#include "omt/cli.hpp"

int main(int argc, char** argv) { return omt::run_cli(argc, argv, std::cout, std::cerr); }
