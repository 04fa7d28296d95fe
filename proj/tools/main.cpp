#include <iostream>

#include "lamcli.hpp"

int main(int argc, char** argv) { return lamcli::run_cli(argc, argv, std::cout, std::cerr); }
