#include <iostream>

#include "msv/cli.hpp"

int main(int argc, char** argv) { return msv::run_cli(argc, argv, std::cout, std::cerr); }
