#include <iostream>

#include "degdel/cli.hpp"

int main(int argc, char** argv) { return degdel::run_cli(argc, argv, std::cout, std::cerr); }
