#include "funcbody/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return funcbody::run_cli(argc, argv, std::cout, std::cerr); }
